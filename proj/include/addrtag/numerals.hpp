// Copyright 2026 The addrtag Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

namespace addrtag {

// Slovak cardinal for 1..999 in standard compound orthography: 44 is
// "štyridsaťštyri", 834 is "osemstotridsaťštyri". Throws on out-of-range.
std::string slovak_cardinal(int n);

// Digit-by-digit spoken reading ("834" -> "osem", "tri", "štyri"), common in
// dictated house numbers. Accepts 0..999.
std::vector<std::string> slovak_digit_words(int n);

}  // namespace addrtag
