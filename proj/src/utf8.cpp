// Copyright 2026 The addrtag Authors
// SPDX-License-Identifier: Apache-2.0

#include "addrtag/utf8.hpp"

#include <array>
#include <utility>

#include "addrtag/error.hpp"

namespace addrtag::utf8 {

namespace {

// Decodes one codepoint starting at s[i]. Returns the codepoint and advances
// i past it; returns U+FFFFFFFF on malformed input without advancing.
char32_t decode_one(std::string_view s, std::size_t& i) noexcept {
  constexpr char32_t bad = 0xFFFFFFFF;
  const auto byte = [&](std::size_t k) {
    return static_cast<unsigned char>(s[k]);
  };
  unsigned char b0 = byte(i);
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  int len;
  char32_t cp;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    return bad;
  }
  if (i + len > s.size()) return bad;
  for (int k = 1; k < len; ++k) {
    unsigned char b = byte(i + k);
    if ((b & 0xC0) != 0x80) return bad;
    cp = (cp << 6) | (b & 0x3F);
  }
  // Reject overlong forms, surrogates and out-of-range values.
  static constexpr char32_t min_for_len[5] = {0, 0, 0x80, 0x800, 0x10000};
  if (cp < min_for_len[len]) return bad;
  if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return bad;
  i += static_cast<std::size_t>(len);
  return cp;
}

void encode_one(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

// (base, combining mark) -> precomposed letter, for the marks that occur in
// Slovak and Czech orthography.
struct composition {
  char32_t base;
  char32_t mark;
  char32_t composed;
};

constexpr char32_t acute = 0x0301;
constexpr char32_t circumflex = 0x0302;
constexpr char32_t diaeresis = 0x0308;
constexpr char32_t ring = 0x030A;
constexpr char32_t caron = 0x030C;

constexpr composition compositions[] = {
    {U'A', acute, 0x00C1},      {U'a', acute, 0x00E1},
    {U'E', acute, 0x00C9},      {U'e', acute, 0x00E9},
    {U'I', acute, 0x00CD},      {U'i', acute, 0x00ED},
    {U'O', acute, 0x00D3},      {U'o', acute, 0x00F3},
    {U'U', acute, 0x00DA},      {U'u', acute, 0x00FA},
    {U'Y', acute, 0x00DD},      {U'y', acute, 0x00FD},
    {U'L', acute, 0x0139},      {U'l', acute, 0x013A},
    {U'R', acute, 0x0154},      {U'r', acute, 0x0155},
    {U'A', diaeresis, 0x00C4},  {U'a', diaeresis, 0x00E4},
    {U'O', circumflex, 0x00D4}, {U'o', circumflex, 0x00F4},
    {U'C', caron, 0x010C},      {U'c', caron, 0x010D},
    {U'D', caron, 0x010E},      {U'd', caron, 0x010F},
    {U'E', caron, 0x011A},      {U'e', caron, 0x011B},
    {U'L', caron, 0x013D},      {U'l', caron, 0x013E},
    {U'N', caron, 0x0147},      {U'n', caron, 0x0148},
    {U'R', caron, 0x0158},      {U'r', caron, 0x0159},
    {U'S', caron, 0x0160},      {U's', caron, 0x0161},
    {U'T', caron, 0x0164},      {U't', caron, 0x0165},
    {U'Z', caron, 0x017D},      {U'z', caron, 0x017E},
    {U'U', ring, 0x016E},       {U'u', ring, 0x016F},
};

}  // namespace

bool is_valid(std::string_view s) noexcept {
  std::size_t i = 0;
  while (i < s.size()) {
    if (decode_one(s, i) == 0xFFFFFFFF) return false;
  }
  return true;
}

std::vector<char32_t> decode(std::string_view s) {
  std::vector<char32_t> out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    char32_t cp = decode_one(s, i);
    if (cp == 0xFFFFFFFF) {
      throw error("invalid UTF-8 at byte offset " + std::to_string(i));
    }
    out.push_back(cp);
  }
  return out;
}

std::string encode(const std::vector<char32_t>& codepoints) {
  std::string out;
  out.reserve(codepoints.size());
  for (char32_t cp : codepoints) encode_one(cp, out);
  return out;
}

std::size_t length(std::string_view s) { return decode(s).size(); }

char32_t to_lower(char32_t c) noexcept {
  if (c >= U'A' && c <= U'Z') return c + 0x20;
  // Latin-1 Supplement uppercase block, skipping the multiplication sign.
  if (c >= 0x00C0 && c <= 0x00DE && c != 0x00D7) return c + 0x20;
  // Latin Extended-A pairs: uppercase even, lowercase odd.
  if ((c >= 0x0100 && c <= 0x0136) || (c >= 0x014A && c <= 0x0176)) {
    if ((c & 1) == 0) return c + 1;
    return c;
  }
  // Latin Extended-A pairs: uppercase odd, lowercase even.
  if (c >= 0x0139 && c <= 0x0147) {
    if ((c & 1) == 1) return c + 1;
    return c;
  }
  if (c == 0x0178) return 0x00FF;  // Y with diaeresis
  if (c == 0x0179 || c == 0x017B || c == 0x017D) return c + 1;
  return c;
}

std::string lower(std::string_view s) {
  auto cps = decode(s);
  for (auto& cp : cps) cp = to_lower(cp);
  return encode(cps);
}

std::string prefix(std::string_view s, std::size_t n) {
  auto cps = decode(s);
  if (cps.size() > n) cps.resize(n);
  return encode(cps);
}

std::string suffix(std::string_view s, std::size_t n) {
  auto cps = decode(s);
  if (cps.size() > n) cps.erase(cps.begin(), cps.end() - static_cast<std::ptrdiff_t>(n));
  return encode(cps);
}

std::string compose_nfc(std::string_view s) {
  auto cps = decode(s);
  std::vector<char32_t> out;
  out.reserve(cps.size());
  for (char32_t cp : cps) {
    if (!out.empty()) {
      bool composed = false;
      for (const auto& c : compositions) {
        if (c.base == out.back() && c.mark == cp) {
          out.back() = c.composed;
          composed = true;
          break;
        }
      }
      if (composed) continue;
    }
    out.push_back(cp);
  }
  return encode(out);
}

}  // namespace addrtag::utf8
