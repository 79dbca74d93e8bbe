// Copyright 2026 The addrtag Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "addrtag/sentence.hpp"

namespace addrtag {

// Fill-in slots of a sentence template. Address slots sample gazetteer or
// generated values; `noise` expands to an O-tagged filler phrase.
enum class slot : std::uint8_t {
  streetname,
  municipalityname,
  housenumber,
  postcode,
  noise,
};

std::string_view to_string(slot s) noexcept;
std::optional<slot> parse_slot(std::string_view word) noexcept;

struct template_element {
  enum class kind : std::uint8_t { literal, placeholder };

  kind which;
  std::string text;       // literal only
  tag literal_tag;        // literal only
  slot placeholder_slot;  // placeholder only

  static template_element literal(std::string text, tag t) {
    return {kind::literal, std::move(text), t, slot::noise};
  }
  static template_element placeholder(slot s) {
    return {kind::placeholder, {}, tag::outside, s};
  }

  bool operator==(const template_element&) const = default;
};

using sentence_template = std::vector<template_element>;

// The textual template grammar, shared by the bank file and the completion
// client: a line of whitespace-separated words where slot names become
// placeholders, digit-shaped words become tagged literals ("12" a house
// number, "84104" and "841 04" postcodes) and everything else an O literal.
// Throws addrtag::error on grammar violations (stray tag tokens, lines
// without an address placeholder, blank lines).
sentence_template parse_template_line(std::string_view line);

std::string template_to_line(const sentence_template& t);

std::size_t count_address_placeholders(const sentence_template& t) noexcept;

// Bank file: JSONL records {"pattern": N, "text": "..."} keyed by the
// generation pattern the template belongs to.
class template_bank {
 public:
  static template_bank load(const std::filesystem::path& path);

  void add(int pattern_id, sentence_template t);
  bool contains(int pattern_id, const sentence_template& t) const;

  const std::vector<sentence_template>& for_pattern(int pattern_id) const;
  std::vector<int> patterns() const;
  std::size_t size() const noexcept;

 private:
  std::map<int, std::vector<sentence_template>> by_pattern_;
};

void append_bank_record(const std::filesystem::path& path, int pattern_id,
                        const sentence_template& t);

}  // namespace addrtag
