// Copyright 2026 The addrtag Authors
// SPDX-License-Identifier: Apache-2.0

#include "addrtag/corpus_io.hpp"

#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

#include "addrtag/error.hpp"
#include "addrtag/util.hpp"

namespace addrtag {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

tag parse_tag_or_throw(std::string_view s, const std::string& source,
                       std::size_t line) {
  auto t = parse_tag(s);
  if (!t) {
    throw io_error("unknown tag \"" + std::string(s) + "\"", source, line);
  }
  return *t;
}

tagged_sentence finish_sentence(std::vector<std::string> tokens,
                                std::vector<tag> tags,
                                const std::string& source, std::size_t line) {
  try {
    return tagged_sentence::make(std::move(tokens), std::move(tags));
  } catch (const validation_error& e) {
    throw io_error(std::string("invalid sentence: ") + e.what(), source, line);
  }
}

corpus parse_jsonl(std::string_view text, const std::string& source,
                   std::string name) {
  corpus c;
  c.name = std::move(name);
  auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::size_t line_no = i + 1;
    if (trim(lines[i]).empty()) continue;
    ordered_json record;
    try {
      record = ordered_json::parse(lines[i]);
    } catch (const nlohmann::json::exception& e) {
      throw io_error(std::string("malformed JSON: ") + e.what(), source,
                     line_no);
    }
    if (!record.is_object() || !record.contains("tokens") ||
        !record.contains("tags") || !record["tokens"].is_array() ||
        !record["tags"].is_array()) {
      throw io_error("record must be an object with \"tokens\" and \"tags\" arrays",
                     source, line_no);
    }
    std::vector<std::string> tokens;
    std::vector<tag> tags;
    for (const auto& t : record["tokens"]) {
      if (!t.is_string()) {
        throw io_error("token is not a string", source, line_no);
      }
      tokens.push_back(t.get<std::string>());
    }
    for (const auto& t : record["tags"]) {
      if (!t.is_string()) {
        throw io_error("tag is not a string", source, line_no);
      }
      tags.push_back(parse_tag_or_throw(t.get<std::string>(), source, line_no));
    }
    if (tokens.size() != tags.size()) {
      throw io_error("tokens/tags length mismatch (" +
                         std::to_string(tokens.size()) + " vs " +
                         std::to_string(tags.size()) + ")",
                     source, line_no);
    }
    c.sentences.push_back(
        finish_sentence(std::move(tokens), std::move(tags), source, line_no));
  }
  return c;
}

corpus parse_conll(std::string_view text, const std::string& source,
                   std::string name) {
  corpus c;
  c.name = std::move(name);
  std::vector<std::string> tokens;
  std::vector<tag> tags;
  std::size_t sentence_start_line = 0;
  auto lines = split_lines(text);
  auto flush = [&](std::size_t line_no) {
    if (tokens.empty()) return;
    c.sentences.push_back(finish_sentence(std::move(tokens), std::move(tags),
                                          source, line_no));
    tokens.clear();
    tags.clear();
  };
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::size_t line_no = i + 1;
    std::string_view line = lines[i];
    if (trim(line).empty()) {
      flush(sentence_start_line);
      continue;
    }
    std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos ||
        line.find('\t', tab + 1) != std::string_view::npos) {
      throw io_error("expected exactly two tab-separated columns", source,
                     line_no);
    }
    std::string token(line.substr(0, tab));
    std::string_view tag_str = line.substr(tab + 1);
    if (!is_valid_token(token)) {
      throw io_error("invalid token \"" + token + "\"", source, line_no);
    }
    if (tokens.empty()) sentence_start_line = line_no;
    tokens.push_back(std::move(token));
    tags.push_back(parse_tag_or_throw(tag_str, source, line_no));
  }
  flush(sentence_start_line);
  return c;
}

}  // namespace

corpus_format parse_corpus_format(std::string_view name) {
  if (name == "jsonl") return corpus_format::jsonl;
  if (name == "conll") return corpus_format::conll;
  throw error("unknown corpus format \"" + std::string(name) + "\"");
}

std::string serialize_corpus(const corpus& c, corpus_format format) {
  std::string out;
  if (format == corpus_format::jsonl) {
    for (const auto& s : c.sentences) {
      ordered_json record;
      record["tokens"] = s.tokens;
      auto& tags = record["tags"] = ordered_json::array();
      for (tag t : s.tags) tags.push_back(std::string(to_string(t)));
      out += record.dump();
      out += '\n';
    }
  } else {
    for (const auto& s : c.sentences) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        out += s.tokens[i];
        out += '\t';
        out += to_string(s.tags[i]);
        out += '\n';
      }
      out += '\n';
    }
  }
  return out;
}

corpus parse_corpus(std::string_view text, corpus_format format,
                    std::string source, std::string name) {
  return format == corpus_format::jsonl
             ? parse_jsonl(text, source, std::move(name))
             : parse_conll(text, source, std::move(name));
}

corpus read_corpus(const std::filesystem::path& path, corpus_format format) {
  std::string text = read_file(path);
  return parse_corpus(text, format, path.string(), path.stem().string());
}

void write_corpus(const corpus& c, const std::filesystem::path& path,
                  corpus_format format) {
  write_file(path, serialize_corpus(c, format));
}

}  // namespace addrtag
