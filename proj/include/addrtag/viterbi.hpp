// Copyright 2026 The addrtag Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <vector>

#include "addrtag/tags.hpp"

namespace addrtag {

using emission_scores = std::vector<std::array<double, tag_count>>;
using transition_scores = std::array<std::array<double, tag_count>, tag_count>;

struct decode_result {
  std::vector<tag> tags;
  double score;
};

// Maximum-score BIO-valid sequence under
//   score = sum_i emission(i, t_i) + sum_i transition(t_{i-1}, t_i).
// Sequences starting with I-X or entering I-X from anything but B-X/I-X of
// the same type are excluded outright. Among equal-scoring sequences the
// lexicographically smallest in the tag order wins, so all-zero scores give
// all-O. Throws on empty input or non-finite scores.
decode_result viterbi_decode(const emission_scores& emissions,
                             const transition_scores& transitions);

}  // namespace addrtag
