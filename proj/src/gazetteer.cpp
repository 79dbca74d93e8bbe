// Copyright 2026 The addrtag Authors
// SPDX-License-Identifier: Apache-2.0

#include "addrtag/gazetteer.hpp"

#include <algorithm>
#include <fstream>

#include "addrtag/error.hpp"
#include "addrtag/sentence.hpp"
#include "addrtag/utf8.hpp"
#include "addrtag/util.hpp"

namespace addrtag {

namespace {

// Trim plus collapse of internal whitespace runs to single spaces.
std::string normalize_spacing(std::string_view raw) {
  auto words = whitespace_tokenize(raw);
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i > 0) out += ' ';
    out += words[i];
  }
  return out;
}

std::vector<std::string> read_name_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open gazetteer file", path.string());
  std::vector<std::string> names;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!utf8::is_valid(line)) {
      throw io_error("invalid UTF-8", path.string(), line_no);
    }
    names.push_back(line);
  }
  if (in.bad()) throw io_error("read failure", path.string());
  return names;
}

std::size_t word_count(std::string_view name) {
  return static_cast<std::size_t>(
      std::count(name.begin(), name.end(), ' ') + 1);
}

}  // namespace

gazetteer::name_set gazetteer::build(std::vector<std::string> raw,
                                     const std::string& label) {
  name_set set;
  for (auto& name : raw) {
    std::string normalized = utf8::compose_nfc(normalize_spacing(name));
    if (normalized.empty()) continue;
    if (set.exact.insert(normalized).second) {
      set.lowercased.insert(utf8::lower(normalized));
      set.max_words = std::max(set.max_words, word_count(normalized));
      set.sorted.push_back(std::move(normalized));
    }
  }
  if (set.sorted.empty()) throw error("empty gazetteer: " + label);
  std::sort(set.sorted.begin(), set.sorted.end());
  return set;
}

gazetteer gazetteer::load(const std::filesystem::path& street_path,
                          const std::filesystem::path& municipality_path) {
  gazetteer g;
  g.streets_ = build(read_name_file(street_path), "streets");
  g.municipalities_ =
      build(read_name_file(municipality_path), "municipalities");
  return g;
}

gazetteer gazetteer::from_lists(std::vector<std::string> streets,
                                std::vector<std::string> municipalities) {
  gazetteer g;
  g.streets_ = build(std::move(streets), "streets");
  g.municipalities_ = build(std::move(municipalities), "municipalities");
  return g;
}

std::size_t gazetteer::size(name_kind kind) const noexcept {
  return set_for(kind).sorted.size();
}

bool gazetteer::contains(name_kind kind, std::string_view name) const {
  return set_for(kind).exact.count(std::string(name)) > 0;
}

const std::vector<std::string>& gazetteer::entries(
    name_kind kind) const noexcept {
  return set_for(kind).sorted;
}

const std::string& gazetteer::sample(name_kind kind, rng& r) const {
  return r.pick(set_for(kind).sorted);
}

std::size_t gazetteer::match_length(name_kind kind,
                                    std::span<const std::string> tokens,
                                    std::size_t start,
                                    bool case_insensitive) const {
  if (start >= tokens.size()) {
    throw error("match_length: start index out of range");
  }
  const name_set& set = set_for(kind);
  std::size_t longest = std::min(set.max_words, tokens.size() - start);
  for (std::size_t n = longest; n >= 1; --n) {
    std::string phrase;
    for (std::size_t k = 0; k < n; ++k) {
      if (k > 0) phrase += ' ';
      phrase += tokens[start + k];
    }
    if (case_insensitive) {
      if (set.lowercased.count(utf8::lower(phrase))) return n;
    } else {
      if (set.exact.count(phrase)) return n;
    }
  }
  return 0;
}

postcode_spec random_postcode(rng& r) {
  std::string digits;
  for (int i = 0; i < 5; ++i) {
    digits += static_cast<char>('0' + r.below(10));
  }
  return postcode_spec{std::move(digits), r.chance(0.5)};
}

std::vector<std::string> postcode_tokens(const postcode_spec& spec) {
  if (spec.digits.size() != 5 ||
      !std::all_of(spec.digits.begin(), spec.digits.end(), [](char c) {
        return c >= '0' && c <= '9';
      })) {
    throw error("postcode must be exactly five digits");
  }
  if (spec.spaced) {
    return {spec.digits.substr(0, 3), spec.digits.substr(3)};
  }
  return {spec.digits};
}

std::string random_house_number(rng& r, bool allow_composite) {
  std::string number = std::to_string(r.range(1, 999));
  if (allow_composite && r.chance(0.2)) {
    number += '/';
    number += std::to_string(r.range(1, 99));
  }
  return number;
}

}  // namespace addrtag
