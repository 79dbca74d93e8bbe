// Copyright 2026 The addrtag Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "addrtag/sentence.hpp"

namespace addrtag {

// One mined confusion pattern: a gold->predicted pair, optionally
// conditioned on entity order or token casing. `rate` is the conditional
// error rate (errors / gold tokens satisfying the condition), `support` the
// number of erroneous tokens behind it.
struct error_pattern {
  std::string description;
  double rate = 0.0;
  std::uint64_t support = 0;

  bool operator==(const error_pattern&) const = default;
};

struct error_pattern_report {
  std::vector<error_pattern> patterns;  // sorted by rate, then support, desc
};

// For the `top_k` most frequent gold->predicted confusions, reports the
// plain rate, the rate conditioned on the relative order of the two entity
// types in the gold sentence (when both sides are entity tags of different
// types), and the rate conditioned on gold-token casing. Patterns without a
// single supporting error are omitted. Perfect predictions give an empty
// report. Requires aligned corpora.
error_pattern_report mine_error_patterns(const corpus& gold,
                                         const corpus& pred,
                                         std::size_t top_k = 10);

}  // namespace addrtag
