// Copyright 2026 The addrtag Authors
// SPDX-License-Identifier: Apache-2.0

#include "addrtag/numerals.hpp"

#include <array>

#include "addrtag/error.hpp"

namespace addrtag {

namespace {

constexpr std::array<const char*, 10> units = {
    "nula",  "jeden", "dva",   "tri",  "štyri",
    "päť",   "šesť",  "sedem", "osem", "deväť",
};

constexpr std::array<const char*, 10> tens = {
    "",          "desať",      "dvadsať",    "tridsať",     "štyridsať",
    "päťdesiat", "šesťdesiat", "sedemdesiat", "osemdesiat", "deväťdesiat",
};

constexpr std::array<const char*, 10> hundreds = {
    "",        "sto",     "dvesto",  "tristo",   "štyristo",
    "päťsto",  "šesťsto", "sedemsto", "osemsto", "deväťsto",
};

constexpr std::array<const char*, 10> ten_to_nineteen = {
    "desať",    "jedenásť", "dvanásť",    "trinásť",  "štrnásť",
    "pätnásť",  "šestnásť", "sedemnásť",  "osemnásť", "devätnásť",
};

}  // namespace

std::string slovak_cardinal(int n) {
  if (n < 1 || n > 999) {
    throw error("house number out of range: " + std::to_string(n));
  }
  std::string out;
  int h = n / 100;
  int rest = n % 100;
  if (h > 0) out += hundreds[static_cast<std::size_t>(h)];
  if (rest == 0) {
    if (out.empty()) out = units[0];
    return out;
  }
  if (rest >= 10 && rest <= 19) {
    out += ten_to_nineteen[static_cast<std::size_t>(rest - 10)];
    return out;
  }
  int t = rest / 10;
  int u = rest % 10;
  if (t > 0) out += tens[static_cast<std::size_t>(t)];
  if (u > 0) out += units[static_cast<std::size_t>(u)];
  return out;
}

std::vector<std::string> slovak_digit_words(int n) {
  if (n < 0 || n > 999) {
    throw error("house number out of range: " + std::to_string(n));
  }
  std::string digits = std::to_string(n);
  std::vector<std::string> words;
  words.reserve(digits.size());
  for (char c : digits) {
    words.emplace_back(units[static_cast<std::size_t>(c - '0')]);
  }
  return words;
}

}  // namespace addrtag
