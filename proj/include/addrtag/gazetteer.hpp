// Copyright 2026 The addrtag Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "addrtag/rng.hpp"

namespace addrtag {

enum class name_kind { street, municipality };

// Official street and municipality name lists. Entries are NFC-normalized,
// trimmed, deduplicated and kept in sorted order; immutable after load.
class gazetteer {
 public:
  // Files are UTF-8, one name per line; blank lines and duplicates are
  // dropped. Throws io_error on unreadable files or invalid UTF-8 and
  // addrtag::error when a list ends up empty.
  static gazetteer load(const std::filesystem::path& street_path,
                        const std::filesystem::path& municipality_path);

  // In-memory construction for tests and smoke validation.
  static gazetteer from_lists(std::vector<std::string> streets,
                              std::vector<std::string> municipalities);

  std::size_t size(name_kind kind) const noexcept;
  bool contains(name_kind kind, std::string_view name) const;

  const std::vector<std::string>& entries(name_kind kind) const noexcept;

  // Uniform draw over the sorted entries; throws on an empty list.
  const std::string& sample(name_kind kind, rng& r) const;

  // Longest n such that tokens[start..start+n) joined by single spaces is an
  // entry (0 when none). `start` must be < tokens.size().
  std::size_t match_length(name_kind kind, std::span<const std::string> tokens,
                           std::size_t start, bool case_insensitive) const;

 private:
  struct name_set {
    std::vector<std::string> sorted;
    std::unordered_set<std::string> exact;
    std::unordered_set<std::string> lowercased;
    std::size_t max_words = 0;
  };

  static name_set build(std::vector<std::string> raw, const std::string& label);

  const name_set& set_for(name_kind kind) const noexcept {
    return kind == name_kind::street ? streets_ : municipalities_;
  }

  name_set streets_;
  name_set municipalities_;
};

// Postal codes are synthesized: five random digits, rendered either as a
// single token ("84104") or as a 3+2 token pair ("841 04").
struct postcode_spec {
  std::string digits;  // exactly five decimal digits
  bool spaced;
};

postcode_spec random_postcode(rng& r);
std::vector<std::string> postcode_tokens(const postcode_spec& spec);

// House numbers are 1-999, optionally with a slash suffix ("834/12") as a
// single token.
std::string random_house_number(rng& r, bool allow_composite);

}  // namespace addrtag
