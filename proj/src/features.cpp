// Copyright 2026 The addrtag Authors
// SPDX-License-Identifier: Apache-2.0

#include "addrtag/features.hpp"

#include <algorithm>

#include "addrtag/error.hpp"
#include "addrtag/utf8.hpp"

namespace addrtag {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return c >= '0' && c <= '9';
  });
}

std::size_t digit_count(std::string_view s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(),
                    [](char c) { return c >= '0' && c <= '9'; }));
}

// Character classes: X uppercase letter, x lowercase letter, d digit,
// - anything else. Letters outside ASCII are classified by case mapping.
std::string word_shape(const std::string& token) {
  std::string shape;
  for (char32_t cp : utf8::decode(token)) {
    if (cp >= U'0' && cp <= U'9') {
      shape += 'd';
    } else if (utf8::to_lower(cp) != cp) {
      shape += 'X';
    } else if ((cp >= U'a' && cp <= U'z') || cp >= 0x00C0) {
      shape += 'x';
    } else {
      shape += '-';
    }
  }
  return shape;
}

// True when some gazetteer phrase starting strictly before `index` covers it.
bool inside_match(const gazetteer& g, name_kind kind,
                  std::span<const std::string> tokens, std::size_t index) {
  std::size_t from = index > 8 ? index - 8 : 0;
  for (std::size_t j = from; j < index; ++j) {
    if (g.match_length(kind, tokens, j, /*case_insensitive=*/true) >
        index - j) {
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<std::string> extract_features(std::span<const std::string> tokens,
                                          std::size_t index,
                                          const gazetteer& g) {
  if (index >= tokens.size()) {
    throw error("feature index out of range");
  }
  const std::string& token = tokens[index];
  std::string lowered = utf8::lower(token);

  std::vector<std::string> features;
  features.reserve(20);
  features.push_back("w=" + lowered);
  features.push_back("shape=" + word_shape(token));

  if (all_digits(token)) features.emplace_back("digits");
  features.push_back("nd=" + std::to_string(digit_count(token)));

  std::size_t cp_len = utf8::length(token);
  for (std::size_t n = 1; n <= 3 && n <= cp_len; ++n) {
    features.push_back("p" + std::to_string(n) + "=" +
                       utf8::lower(utf8::prefix(token, n)));
    features.push_back("s" + std::to_string(n) + "=" +
                       utf8::lower(utf8::suffix(token, n)));
  }

  features.push_back(
      index == 0 ? "prev=<s>" : "prev=" + utf8::lower(tokens[index - 1]));
  features.push_back(index + 1 == tokens.size()
                         ? "next=</s>"
                         : "next=" + utf8::lower(tokens[index + 1]));
  features.push_back(index == 0 ? "pshape=<s>"
                                : "pshape=" + word_shape(tokens[index - 1]));
  features.push_back(index + 1 == tokens.size()
                         ? "nshape=</s>"
                         : "nshape=" + word_shape(tokens[index + 1]));

  if (g.match_length(name_kind::street, tokens, index, true) > 0) {
    features.emplace_back("gaz:street");
  }
  if (inside_match(g, name_kind::street, tokens, index)) {
    features.emplace_back("gaz:street:in");
  }
  if (g.match_length(name_kind::municipality, tokens, index, true) > 0) {
    features.emplace_back("gaz:muni");
  }
  if (inside_match(g, name_kind::municipality, tokens, index)) {
    features.emplace_back("gaz:muni:in");
  }

  if (all_digits(token)) {
    if (token.size() == 5) features.emplace_back("pc5");
    if (token.size() == 3 && index + 1 < tokens.size() &&
        all_digits(tokens[index + 1]) && tokens[index + 1].size() == 2) {
      features.emplace_back("pc3+2");
    }
    if (token.size() == 2 && index > 0 && all_digits(tokens[index - 1]) &&
        tokens[index - 1].size() == 3) {
      features.emplace_back("pc2after3");
    }
  }

  if (index == 0) features.emplace_back("first");
  if (token == lowered) features.emplace_back("lower");

  std::sort(features.begin(), features.end());
  features.erase(std::unique(features.begin(), features.end()),
                 features.end());
  return features;
}

}  // namespace addrtag
