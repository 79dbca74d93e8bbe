// Copyright 2026 The addrtag Authors
// SPDX-License-Identifier: Apache-2.0

#include "addrtag/tags.hpp"

namespace addrtag {

namespace {

constexpr std::array<std::string_view, tag_count> tag_names = {
    "O",
    "B-Street",
    "I-Street",
    "B-Housenumber",
    "I-Housenumber",
    "B-Municipality",
    "I-Municipality",
    "B-Postcode",
    "I-Postcode",
};

constexpr std::array<std::string_view, entity_type_count> entity_names = {
    "Street",
    "Housenumber",
    "Municipality",
    "Postcode",
};

}  // namespace

std::string_view to_string(tag t) noexcept { return tag_names[index_of(t)]; }

std::string_view to_string(entity_type e) noexcept {
  return entity_names[static_cast<std::size_t>(e)];
}

std::optional<tag> parse_tag(std::string_view s) noexcept {
  for (std::size_t i = 0; i < tag_count; ++i) {
    if (tag_names[i] == s) return tag_at(i);
  }
  return std::nullopt;
}

std::optional<entity_type> parse_entity_type(std::string_view s) noexcept {
  for (std::size_t i = 0; i < entity_type_count; ++i) {
    if (entity_names[i] == s) return static_cast<entity_type>(i);
  }
  return std::nullopt;
}

}  // namespace addrtag
