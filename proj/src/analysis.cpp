// Copyright 2026 The addrtag Authors
// SPDX-License-Identifier: Apache-2.0

#include "addrtag/analysis.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>

#include "addrtag/error.hpp"
#include "addrtag/utf8.hpp"

namespace addrtag {

namespace {

std::string lowercase_name(entity_type e) {
  return utf8::lower(std::string(to_string(e)));
}

// Position of the first token of the first span of the given type, if any.
std::optional<std::size_t> first_span_start(const tagged_sentence& s,
                                            entity_type type) {
  for (std::size_t i = 0; i < s.tags.size(); ++i) {
    if (s.tags[i] == begin_of(type)) return i;
  }
  return std::nullopt;
}

struct pair_counts {
  std::uint64_t errors = 0;
  // Split by relative entity order in the gold sentence.
  std::uint64_t errors_before = 0, gold_before = 0;
  std::uint64_t errors_after = 0, gold_after = 0;
  // Split by gold-token casing.
  std::uint64_t errors_lower = 0, gold_lower = 0;
  std::uint64_t errors_cased = 0, gold_cased = 0;
};

std::string pair_label(tag gold, tag pred) {
  return std::string("gold ") + std::string(to_string(gold)) +
         " -> predicted " + std::string(to_string(pred));
}

}  // namespace

error_pattern_report mine_error_patterns(const corpus& gold,
                                         const corpus& pred,
                                         std::size_t top_k) {
  if (gold.size() != pred.size()) {
    throw validation_error("corpora have different sentence counts",
                           std::min(gold.size(), pred.size()));
  }

  // Pass 1: total confusion counts and per-gold-tag supports.
  std::map<std::pair<tag, tag>, std::uint64_t> confusion;
  std::array<std::uint64_t, tag_count> gold_support{};
  for (std::size_t s = 0; s < gold.size(); ++s) {
    const auto& gs = gold.sentences[s];
    const auto& ps = pred.sentences[s];
    if (gs.size() != ps.size()) {
      throw validation_error("sentence " + std::to_string(s) +
                                 " length mismatch",
                             s);
    }
    for (std::size_t i = 0; i < gs.size(); ++i) {
      gold_support[index_of(gs.tags[i])] += 1;
      if (gs.tags[i] != ps.tags[i]) {
        confusion[{gs.tags[i], ps.tags[i]}] += 1;
      }
    }
  }
  if (confusion.empty()) return {};

  std::vector<std::pair<std::pair<tag, tag>, std::uint64_t>> ranked(
      confusion.begin(), confusion.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) {
                     return a.second > b.second;
                   });
  if (ranked.size() > top_k) ranked.resize(top_k);

  // Pass 2: conditional splits for the selected pairs.
  std::map<std::pair<tag, tag>, pair_counts> detail;
  for (const auto& [pair, count] : ranked) {
    detail[pair].errors = count;
  }
  for (std::size_t s = 0; s < gold.size(); ++s) {
    const auto& gs = gold.sentences[s];
    const auto& ps = pred.sentences[s];
    for (auto& [pair, counts] : detail) {
      auto [g, p] = pair;
      bool order_applies = g != tag::outside && p != tag::outside &&
                           entity_of(g) != entity_of(p);
      std::optional<bool> gold_entity_first;
      if (order_applies) {
        auto a = first_span_start(gs, entity_of(g));
        auto b = first_span_start(gs, entity_of(p));
        if (a && b) gold_entity_first = *a < *b;
      }
      for (std::size_t i = 0; i < gs.size(); ++i) {
        if (gs.tags[i] != g) continue;
        bool is_error = ps.tags[i] == p;
        if (gold_entity_first.has_value()) {
          if (*gold_entity_first) {
            counts.gold_before += 1;
            counts.errors_before += is_error ? 1 : 0;
          } else {
            counts.gold_after += 1;
            counts.errors_after += is_error ? 1 : 0;
          }
        }
        bool lower = gs.tokens[i] == utf8::lower(gs.tokens[i]);
        if (lower) {
          counts.gold_lower += 1;
          counts.errors_lower += is_error ? 1 : 0;
        } else {
          counts.gold_cased += 1;
          counts.errors_cased += is_error ? 1 : 0;
        }
      }
    }
  }

  error_pattern_report report;
  auto emit = [&](std::string description, std::uint64_t errors,
                  std::uint64_t support) {
    if (errors == 0 || support == 0) return;
    report.patterns.push_back(error_pattern{
        std::move(description),
        static_cast<double>(errors) / static_cast<double>(support), errors});
  };

  for (const auto& [pair, counts] : detail) {
    auto [g, p] = pair;
    std::string base = pair_label(g, p);
    emit(base, counts.errors, gold_support[index_of(g)]);
    if (g != tag::outside && p != tag::outside &&
        entity_of(g) != entity_of(p)) {
      std::string ge = lowercase_name(entity_of(g));
      std::string pe = lowercase_name(entity_of(p));
      emit(base + " | " + ge + " precedes " + pe, counts.errors_before,
           counts.gold_before);
      emit(base + " | " + ge + " follows " + pe, counts.errors_after,
           counts.gold_after);
    }
    emit(base + " | gold token lowercase", counts.errors_lower,
         counts.gold_lower);
    emit(base + " | gold token capitalized", counts.errors_cased,
         counts.gold_cased);
  }

  std::sort(report.patterns.begin(), report.patterns.end(),
            [](const error_pattern& a, const error_pattern& b) {
              if (a.rate != b.rate) return a.rate > b.rate;
              if (a.support != b.support) return a.support > b.support;
              return a.description < b.description;
            });
  return report;
}

}  // namespace addrtag
