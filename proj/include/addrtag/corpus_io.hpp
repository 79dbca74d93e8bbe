// Copyright 2026 The addrtag Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "addrtag/sentence.hpp"

namespace addrtag {

// JSONL: one object per sentence, {"tokens": [...], "tags": [...]}.
// CoNLL: one "token<TAB>tag" pair per line, blank line after each sentence.
// Both UTF-8 with LF newlines. The writers are canonical: a given corpus
// always serializes to the same bytes.
enum class corpus_format { jsonl, conll };

corpus_format parse_corpus_format(std::string_view name);

std::string serialize_corpus(const corpus& c, corpus_format format);

// `source` names the input in error messages (a path or a label).
corpus parse_corpus(std::string_view text, corpus_format format,
                    std::string source, std::string name = "");

corpus read_corpus(const std::filesystem::path& path, corpus_format format);
void write_corpus(const corpus& c, const std::filesystem::path& path,
                  corpus_format format);

}  // namespace addrtag
