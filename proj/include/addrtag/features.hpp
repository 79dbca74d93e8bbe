// Copyright 2026 The addrtag Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string>
#include <vector>

#include "addrtag/gazetteer.hpp"

namespace addrtag {

inline constexpr int feature_template_version = 1;

// Active features for one token position: surface form, word shape, digit
// statistics, short affixes, neighbour words, gazetteer and postcode-shape
// flags. Sorted and duplicate-free. Throws on an out-of-range index.
std::vector<std::string> extract_features(std::span<const std::string> tokens,
                                          std::size_t index,
                                          const gazetteer& g);

}  // namespace addrtag
