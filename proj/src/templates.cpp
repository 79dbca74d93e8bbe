// Copyright 2026 The addrtag Authors
// SPDX-License-Identifier: Apache-2.0

#include "addrtag/templates.hpp"

#include <algorithm>
#include <fstream>

#include <nlohmann/json.hpp>

#include "addrtag/error.hpp"
#include "addrtag/util.hpp"

namespace addrtag {

namespace {

constexpr std::string_view slot_names[] = {
    "streetname", "municipalityname", "housenumber", "postcode", "noise",
};

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return c >= '0' && c <= '9';
  });
}

bool digit_slash_digit(std::string_view s) {
  std::size_t slash = s.find('/');
  if (slash == std::string_view::npos) return false;
  return all_digits(s.substr(0, slash)) && all_digits(s.substr(slash + 1));
}

bool looks_like_tag(std::string_view s) {
  if (parse_tag(s)) return true;
  return s.size() >= 2 && (s[0] == 'B' || s[0] == 'I') && s[1] == '-';
}

}  // namespace

std::string_view to_string(slot s) noexcept {
  return slot_names[static_cast<std::size_t>(s)];
}

std::optional<slot> parse_slot(std::string_view word) noexcept {
  for (std::size_t i = 0; i < std::size(slot_names); ++i) {
    if (slot_names[i] == word) return static_cast<slot>(i);
  }
  return std::nullopt;
}

sentence_template parse_template_line(std::string_view line) {
  auto words = whitespace_tokenize(line);
  if (words.empty()) throw error("blank template line");
  sentence_template result;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::string& word = words[i];
    if (auto s = parse_slot(word)) {
      result.push_back(template_element::placeholder(*s));
      continue;
    }
    if (looks_like_tag(word)) {
      throw error("stray tag token \"" + word + "\"");
    }
    if (all_digits(word)) {
      if (word.size() == 5) {
        result.push_back(template_element::literal(word, tag::b_postcode));
      } else if (word.size() == 3 && i + 1 < words.size() &&
                 all_digits(words[i + 1]) && words[i + 1].size() == 2) {
        result.push_back(template_element::literal(word, tag::b_postcode));
        result.push_back(
            template_element::literal(words[i + 1], tag::i_postcode));
        ++i;
      } else {
        result.push_back(template_element::literal(word, tag::b_housenumber));
      }
      continue;
    }
    if (digit_slash_digit(word)) {
      result.push_back(template_element::literal(word, tag::b_housenumber));
      continue;
    }
    result.push_back(template_element::literal(word, tag::outside));
  }
  if (count_address_placeholders(result) == 0) {
    throw error("no address placeholder in template line");
  }
  return result;
}

std::string template_to_line(const sentence_template& t) {
  std::string out;
  for (const auto& e : t) {
    if (!out.empty()) out += ' ';
    if (e.which == template_element::kind::placeholder) {
      out += to_string(e.placeholder_slot);
    } else {
      out += e.text;
    }
  }
  return out;
}

std::size_t count_address_placeholders(const sentence_template& t) noexcept {
  std::size_t n = 0;
  for (const auto& e : t) {
    if (e.which == template_element::kind::placeholder &&
        e.placeholder_slot != slot::noise) {
      ++n;
    }
  }
  return n;
}

template_bank template_bank::load(const std::filesystem::path& path) {
  std::string text = read_file(path);
  template_bank bank;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view line(text.data() + start,
                          (nl == std::string::npos ? text.size() : nl) - start);
    start = nl == std::string::npos ? text.size() : nl + 1;
    ++line_no;
    if (trim(line).empty()) continue;
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw io_error(std::string("malformed JSON: ") + e.what(), path.string(),
                     line_no);
    }
    if (!record.is_object() || !record.contains("pattern") ||
        !record.contains("text") || !record["pattern"].is_number_integer() ||
        !record["text"].is_string()) {
      throw io_error("record must have integer \"pattern\" and string \"text\"",
                     path.string(), line_no);
    }
    try {
      bank.add(record["pattern"].get<int>(),
               parse_template_line(record["text"].get<std::string>()));
    } catch (const error& e) {
      throw io_error(std::string("bad template: ") + e.what(), path.string(),
                     line_no);
    }
  }
  if (bank.size() == 0) {
    throw io_error("template bank is empty", path.string());
  }
  return bank;
}

void template_bank::add(int pattern_id, sentence_template t) {
  by_pattern_[pattern_id].push_back(std::move(t));
}

bool template_bank::contains(int pattern_id, const sentence_template& t) const {
  auto it = by_pattern_.find(pattern_id);
  if (it == by_pattern_.end()) return false;
  return std::find(it->second.begin(), it->second.end(), t) !=
         it->second.end();
}

const std::vector<sentence_template>& template_bank::for_pattern(
    int pattern_id) const {
  auto it = by_pattern_.find(pattern_id);
  if (it == by_pattern_.end() || it->second.empty()) {
    throw error("no templates for pattern " + std::to_string(pattern_id));
  }
  return it->second;
}

std::vector<int> template_bank::patterns() const {
  std::vector<int> ids;
  ids.reserve(by_pattern_.size());
  for (const auto& [id, templates] : by_pattern_) ids.push_back(id);
  return ids;
}

std::size_t template_bank::size() const noexcept {
  std::size_t n = 0;
  for (const auto& [id, templates] : by_pattern_) n += templates.size();
  return n;
}

void append_bank_record(const std::filesystem::path& path, int pattern_id,
                        const sentence_template& t) {
  nlohmann::ordered_json record;
  record["pattern"] = pattern_id;
  record["text"] = template_to_line(t);
  std::ofstream out(path, std::ios::binary | std::ios::app);
  if (!out) throw io_error("cannot open bank file for append", path.string());
  out << record.dump() << '\n';
  if (!out) throw io_error("write failure", path.string());
}

}  // namespace addrtag
