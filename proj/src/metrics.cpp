// Copyright 2026 The addrtag Authors
// SPDX-License-Identifier: Apache-2.0

#include "addrtag/metrics.hpp"

#include <algorithm>
#include <charconv>

#include "addrtag/error.hpp"
#include "addrtag/util.hpp"

namespace addrtag {

std::uint64_t confusion_matrix::row_sum(tag gold) const {
  std::uint64_t sum = 0;
  for (auto v : counts_[index_of(gold)]) sum += v;
  return sum;
}

std::uint64_t confusion_matrix::column_sum(tag predicted) const {
  std::uint64_t sum = 0;
  for (const auto& row : counts_) sum += row[index_of(predicted)];
  return sum;
}

std::uint64_t confusion_matrix::trace() const {
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < tag_count; ++i) sum += counts_[i][i];
  return sum;
}

std::uint64_t confusion_matrix::total() const {
  std::uint64_t sum = 0;
  for (const auto& row : counts_) {
    for (auto v : row) sum += v;
  }
  return sum;
}

confusion_matrix& confusion_matrix::operator+=(const confusion_matrix& other) {
  for (std::size_t g = 0; g < tag_count; ++g) {
    for (std::size_t p = 0; p < tag_count; ++p) {
      counts_[g][p] += other.counts_[g][p];
    }
  }
  return *this;
}

confusion_matrix confusion_matrix::from_corpora(const corpus& gold,
                                                const corpus& pred) {
  if (gold.size() != pred.size()) {
    throw validation_error("corpora have different sentence counts: " +
                               std::to_string(gold.size()) + " vs " +
                               std::to_string(pred.size()),
                           std::min(gold.size(), pred.size()));
  }
  confusion_matrix cm;
  for (std::size_t s = 0; s < gold.size(); ++s) {
    const auto& gs = gold.sentences[s];
    const auto& ps = pred.sentences[s];
    if (gs.size() != ps.size()) {
      throw validation_error("sentence " + std::to_string(s) +
                                 " length mismatch: " +
                                 std::to_string(gs.size()) + " vs " +
                                 std::to_string(ps.size()),
                             s);
    }
    for (std::size_t i = 0; i < gs.size(); ++i) {
      cm.add(gs.tags[i], ps.tags[i]);
    }
  }
  return cm;
}

confusion_matrix confusion_matrix::read(const std::filesystem::path& path) {
  std::string text = read_file(path);
  // Strip comments, then expect exactly 81 integers.
  std::string cleaned;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) nl = text.size();
    std::string_view line(text.data() + pos, nl - pos);
    std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    cleaned += std::string(line);
    cleaned += '\n';
    pos = nl + 1;
  }
  auto fields = whitespace_tokenize(cleaned);
  if (fields.size() != tag_count * tag_count) {
    throw io_error("expected " + std::to_string(tag_count * tag_count) +
                       " integers, found " + std::to_string(fields.size()),
                   path.string());
  }
  confusion_matrix cm;
  for (std::size_t g = 0; g < tag_count; ++g) {
    for (std::size_t p = 0; p < tag_count; ++p) {
      const std::string& field = fields[g * tag_count + p];
      std::uint64_t value = 0;
      auto [ptr, ec] =
          std::from_chars(field.data(), field.data() + field.size(), value);
      if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw io_error("malformed count \"" + field + "\"", path.string());
      }
      cm.counts_[g][p] = value;
    }
  }
  return cm;
}

std::string confusion_matrix::to_text() const {
  std::string out =
      "# gold rows x predicted columns; axis order:\n#";
  for (tag t : all_tags()) {
    out += ' ';
    out += to_string(t);
  }
  out += '\n';
  for (std::size_t g = 0; g < tag_count; ++g) {
    for (std::size_t p = 0; p < tag_count; ++p) {
      if (p > 0) out += ' ';
      out += std::to_string(counts_[g][p]);
    }
    out += '\n';
  }
  return out;
}

double token_accuracy(const confusion_matrix& cm) {
  std::uint64_t total = cm.total();
  if (total == 0) throw error("empty confusion matrix");
  return static_cast<double>(cm.trace()) / static_cast<double>(total);
}

double accuracy_delta_pp(const confusion_matrix& a, const confusion_matrix& b) {
  return 100.0 * (token_accuracy(b) - token_accuracy(a));
}

std::array<class_metrics, tag_count> per_class_prf(const confusion_matrix& cm) {
  std::array<class_metrics, tag_count> out;
  for (std::size_t i = 0; i < tag_count; ++i) {
    tag t = tag_at(i);
    std::uint64_t row = cm.row_sum(t);
    std::uint64_t column = cm.column_sum(t);
    std::uint64_t diag = cm.at(t, t);
    class_metrics& m = out[i];
    m.support = row;
    if (column > 0) {
      m.precision = static_cast<double>(diag) / static_cast<double>(column);
    }
    if (row > 0) {
      m.recall = static_cast<double>(diag) / static_cast<double>(row);
    }
    if (m.precision && m.recall && (*m.precision + *m.recall) > 0) {
      m.f1 = 2.0 * *m.precision * *m.recall / (*m.precision + *m.recall);
    }
  }
  return out;
}

std::array<entity_class_metrics, entity_type_count> entity_f1(
    const corpus& gold, const corpus& pred) {
  if (gold.size() != pred.size()) {
    throw validation_error("corpora have different sentence counts",
                           std::min(gold.size(), pred.size()));
  }
  std::array<entity_class_metrics, entity_type_count> out{};
  for (std::size_t s = 0; s < gold.size(); ++s) {
    if (gold.sentences[s].size() != pred.sentences[s].size()) {
      throw validation_error("sentence " + std::to_string(s) +
                                 " length mismatch",
                             s);
    }
    auto gold_spans = extract_entities(gold.sentences[s]);
    auto pred_spans = extract_entities(pred.sentences[s]);
    for (const auto& span : gold_spans) {
      out[static_cast<std::size_t>(span.type)].gold += 1;
    }
    for (const auto& span : pred_spans) {
      auto& m = out[static_cast<std::size_t>(span.type)];
      m.predicted += 1;
      if (std::find(gold_spans.begin(), gold_spans.end(), span) !=
          gold_spans.end()) {
        m.true_positives += 1;
      }
    }
  }
  for (auto& m : out) {
    if (m.predicted > 0) {
      m.precision = static_cast<double>(m.true_positives) /
                    static_cast<double>(m.predicted);
    }
    if (m.gold > 0) {
      m.recall = static_cast<double>(m.true_positives) /
                 static_cast<double>(m.gold);
    }
    if (m.precision && m.recall && (*m.precision + *m.recall) > 0) {
      m.f1 = 2.0 * *m.precision * *m.recall / (*m.precision + *m.recall);
    }
  }
  return out;
}

eval_report evaluate(const corpus& gold, const corpus& pred) {
  eval_report report;
  report.matrix = confusion_matrix::from_corpora(gold, pred);
  report.token_accuracy = token_accuracy(report.matrix);
  report.per_class = per_class_prf(report.matrix);
  report.per_entity = entity_f1(gold, pred);
  return report;
}

}  // namespace addrtag
