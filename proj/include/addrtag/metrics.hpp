// Copyright 2026 The addrtag Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "addrtag/sentence.hpp"

namespace addrtag {

// 9x9 gold-by-predicted token counts; both axes follow the tag total order.
class confusion_matrix {
 public:
  void add(tag gold, tag predicted, std::uint64_t n = 1) {
    counts_[index_of(gold)][index_of(predicted)] += n;
  }

  std::uint64_t at(tag gold, tag predicted) const {
    return counts_[index_of(gold)][index_of(predicted)];
  }

  std::uint64_t row_sum(tag gold) const;
  std::uint64_t column_sum(tag predicted) const;
  std::uint64_t trace() const;
  std::uint64_t total() const;

  // Matrices over corpus shards sum to the whole-corpus matrix.
  confusion_matrix& operator+=(const confusion_matrix& other);

  bool operator==(const confusion_matrix&) const = default;

  // Requires aligned corpora: same sentence count and per-sentence lengths.
  // Throws validation_error with the offending sentence index otherwise.
  static confusion_matrix from_corpora(const corpus& gold, const corpus& pred);

  // Fixture format: nine rows of nine integers, gold rows by predicted
  // columns in tag order; '#' starts a comment.
  static confusion_matrix read(const std::filesystem::path& path);
  std::string to_text() const;

 private:
  std::array<std::array<std::uint64_t, tag_count>, tag_count> counts_{};
};

// trace/total. Throws on an all-zero matrix.
double token_accuracy(const confusion_matrix& cm);

// Percentage points: 100 * (accuracy(b) - accuracy(a)).
double accuracy_delta_pp(const confusion_matrix& a, const confusion_matrix& b);

// Absent (nullopt) when the defining denominator is zero.
struct class_metrics {
  std::optional<double> precision;
  std::optional<double> recall;
  std::optional<double> f1;
  std::uint64_t support = 0;  // gold tokens with this tag
};

std::array<class_metrics, tag_count> per_class_prf(const confusion_matrix& cm);

struct entity_class_metrics {
  std::uint64_t true_positives = 0;
  std::uint64_t predicted = 0;
  std::uint64_t gold = 0;
  std::optional<double> precision;
  std::optional<double> recall;
  std::optional<double> f1;
};

// Exact-span matching: a predicted span counts only when type, start and
// end all equal a gold span of the same sentence.
std::array<entity_class_metrics, entity_type_count> entity_f1(
    const corpus& gold, const corpus& pred);

struct eval_report {
  confusion_matrix matrix;
  double token_accuracy = 0.0;
  std::array<class_metrics, tag_count> per_class;
  std::array<entity_class_metrics, entity_type_count> per_entity;
};

eval_report evaluate(const corpus& gold, const corpus& pred);

}  // namespace addrtag
