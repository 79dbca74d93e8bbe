// Copyright 2026 The addrtag Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "addrtag/tags.hpp"

namespace addrtag {

// A token is a whitespace-delimited word: non-empty, no embedded whitespace.
bool is_valid_token(std::string_view text) noexcept;

// Parallel token/tag sequences of equal, non-zero length with a BIO-valid
// tag sequence. Values are immutable by convention once built; `make`
// enforces the invariants, direct aggregate construction is for code that
// guarantees them itself.
struct tagged_sentence {
  std::vector<std::string> tokens;
  std::vector<tag> tags;

  static tagged_sentence make(std::vector<std::string> tokens,
                              std::vector<tag> tags);

  std::size_t size() const noexcept { return tokens.size(); }
  bool operator==(const tagged_sentence&) const = default;
};

// One maximal B-X (I-X)* run; `start`/`end` are inclusive token indices.
struct entity_span {
  entity_type type;
  std::size_t start;
  std::size_t end;

  bool operator==(const entity_span&) const = default;
};

struct corpus {
  std::string name;
  std::vector<tagged_sentence> sentences;

  std::size_t size() const noexcept { return sentences.size(); }
  bool operator==(const corpus&) const = default;
};

// Index of the first I-X not preceded by B-X/I-X of the same type;
// nullopt when the sequence is BIO-valid.
std::optional<std::size_t> first_bio_violation(std::span<const tag> tags) noexcept;

inline bool is_bio_valid(std::span<const tag> tags) noexcept {
  return !first_bio_violation(tags).has_value();
}

// Left-to-right spans of a BIO-valid sentence. Throws validation_error
// (carrying the violating index) on invalid input.
std::vector<entity_span> extract_entities(const tagged_sentence& s);

// Reconstructs the tag sequence implied by a span set over `length` tokens.
std::vector<tag> tags_from_spans(std::span<const entity_span> spans,
                                 std::size_t length);

std::vector<std::string> whitespace_tokenize(std::string_view line);

}  // namespace addrtag
