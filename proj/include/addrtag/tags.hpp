// Copyright 2026 The addrtag Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace addrtag {

// The nine token labels of the BIO scheme over four address entity types.
// The enumerator order is the canonical total order: it fixes confusion
// matrix axes and breaks score ties everywhere.
enum class tag : std::uint8_t {
  outside = 0,
  b_street,
  i_street,
  b_housenumber,
  i_housenumber,
  b_municipality,
  i_municipality,
  b_postcode,
  i_postcode,
};

inline constexpr std::size_t tag_count = 9;

enum class entity_type : std::uint8_t {
  street = 0,
  housenumber,
  municipality,
  postcode,
};

inline constexpr std::size_t entity_type_count = 4;

constexpr std::size_t index_of(tag t) noexcept {
  return static_cast<std::size_t>(t);
}

constexpr tag tag_at(std::size_t index) noexcept {
  return static_cast<tag>(index);
}

constexpr std::array<tag, tag_count> all_tags() noexcept {
  return {tag::outside,        tag::b_street,       tag::i_street,
          tag::b_housenumber,  tag::i_housenumber,  tag::b_municipality,
          tag::i_municipality, tag::b_postcode,     tag::i_postcode};
}

constexpr bool is_begin(tag t) noexcept {
  auto i = index_of(t);
  return i != 0 && (i % 2) == 1;
}

constexpr bool is_inside(tag t) noexcept {
  auto i = index_of(t);
  return i != 0 && (i % 2) == 0;
}

// Only meaningful for non-outside tags.
constexpr entity_type entity_of(tag t) noexcept {
  return static_cast<entity_type>((index_of(t) - 1) / 2);
}

constexpr tag begin_of(entity_type e) noexcept {
  return tag_at(1 + 2 * static_cast<std::size_t>(e));
}

constexpr tag inside_of(entity_type e) noexcept {
  return tag_at(2 + 2 * static_cast<std::size_t>(e));
}

// BIO constraints: I-X may only follow B-X or I-X of the same type, and a
// sequence may not start with any I-X.
constexpr bool start_allowed(tag t) noexcept { return !is_inside(t); }

constexpr bool transition_allowed(tag from, tag to) noexcept {
  if (!is_inside(to)) return true;
  return (is_begin(from) || is_inside(from)) && entity_of(from) == entity_of(to);
}

std::string_view to_string(tag t) noexcept;
std::string_view to_string(entity_type e) noexcept;

// Exact, case-sensitive label lookup; nullopt for anything outside the set.
std::optional<tag> parse_tag(std::string_view s) noexcept;
std::optional<entity_type> parse_entity_type(std::string_view s) noexcept;

}  // namespace addrtag
