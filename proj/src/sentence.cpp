// Copyright 2026 The addrtag Authors
// SPDX-License-Identifier: Apache-2.0

#include "addrtag/sentence.hpp"

#include <cctype>

#include "addrtag/error.hpp"

namespace addrtag {

namespace {

bool is_space(char c) noexcept {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

}  // namespace

bool is_valid_token(std::string_view text) noexcept {
  if (text.empty()) return false;
  for (char c : text) {
    if (is_space(c)) return false;
  }
  return true;
}

tagged_sentence tagged_sentence::make(std::vector<std::string> tokens,
                                      std::vector<tag> tags) {
  if (tokens.size() != tags.size()) {
    throw validation_error("token/tag length mismatch: " +
                               std::to_string(tokens.size()) + " vs " +
                               std::to_string(tags.size()),
                           0);
  }
  if (tokens.empty()) {
    throw validation_error("empty sentence", 0);
  }
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!is_valid_token(tokens[i])) {
      throw validation_error("invalid token at index " + std::to_string(i),
                             i);
    }
  }
  if (auto bad = first_bio_violation(tags)) {
    throw validation_error("BIO violation at index " + std::to_string(*bad),
                           *bad);
  }
  return tagged_sentence{std::move(tokens), std::move(tags)};
}

std::optional<std::size_t> first_bio_violation(
    std::span<const tag> tags) noexcept {
  for (std::size_t i = 0; i < tags.size(); ++i) {
    if (!is_inside(tags[i])) continue;
    if (i == 0) return i;
    tag prev = tags[i - 1];
    if (!(is_begin(prev) || is_inside(prev)) ||
        entity_of(prev) != entity_of(tags[i])) {
      return i;
    }
  }
  return std::nullopt;
}

std::vector<entity_span> extract_entities(const tagged_sentence& s) {
  if (auto bad = first_bio_violation(s.tags)) {
    throw validation_error("BIO violation at index " + std::to_string(*bad),
                           *bad);
  }
  std::vector<entity_span> spans;
  for (std::size_t i = 0; i < s.tags.size(); ++i) {
    if (!is_begin(s.tags[i])) continue;
    entity_type type = entity_of(s.tags[i]);
    std::size_t end = i;
    while (end + 1 < s.tags.size() && s.tags[end + 1] == inside_of(type)) {
      ++end;
    }
    spans.push_back(entity_span{type, i, end});
    i = end;
  }
  return spans;
}

std::vector<tag> tags_from_spans(std::span<const entity_span> spans,
                                 std::size_t length) {
  std::vector<tag> tags(length, tag::outside);
  for (const auto& span : spans) {
    if (span.start > span.end || span.end >= length) {
      throw validation_error("span out of range", span.start);
    }
    tags[span.start] = begin_of(span.type);
    for (std::size_t i = span.start + 1; i <= span.end; ++i) {
      tags[i] = inside_of(span.type);
    }
  }
  return tags;
}

std::vector<std::string> whitespace_tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) tokens.emplace_back(line.substr(start, i - start));
  }
  return tokens;
}

}  // namespace addrtag
