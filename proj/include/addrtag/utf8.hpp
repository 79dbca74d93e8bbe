// Copyright 2026 The addrtag Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

// Minimal UTF-8 helpers for Latin-script text. Case mapping and composition
// cover ASCII, Latin-1 Supplement and Latin Extended-A, which is all the
// Slovak alphabet needs; other codepoints pass through unchanged.
namespace addrtag::utf8 {

bool is_valid(std::string_view s) noexcept;

// Throws addrtag::error on malformed input.
std::vector<char32_t> decode(std::string_view s);
std::string encode(const std::vector<char32_t>& codepoints);

std::size_t length(std::string_view s);

char32_t to_lower(char32_t c) noexcept;
std::string lower(std::string_view s);

// First / last `n` codepoints (the whole string when shorter).
std::string prefix(std::string_view s, std::size_t n);
std::string suffix(std::string_view s, std::size_t n);

// Composes combining acute/caron/diaeresis/circumflex/ring marks onto the
// preceding Latin base letter where a precomposed form exists. Precomposed
// input comes back unchanged, so the function is idempotent.
std::string compose_nfc(std::string_view s);

}  // namespace addrtag::utf8
