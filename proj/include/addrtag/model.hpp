// Copyright 2026 The addrtag Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "addrtag/features.hpp"
#include "addrtag/sentence.hpp"
#include "addrtag/viterbi.hpp"

namespace addrtag {

// Interned feature identifiers. Ids are assigned in insertion order, which
// the trainer keeps deterministic.
class feature_map {
 public:
  std::uint32_t intern(const std::string& name);
  // -1 when unknown.
  std::int64_t lookup(const std::string& name) const;

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::uint32_t id) const { return names_[id]; }

 private:
  std::unordered_map<std::string, std::uint32_t> ids_;
  std::vector<std::string> names_;
};

// Linear sequence labeler: per-(feature, tag) emission weights plus
// tag-transition weights. Decoding always goes through the BIO-constrained
// decoder, so output is valid by construction. Immutable once trained.
struct tagger_model {
  feature_map features;
  std::vector<std::array<double, tag_count>> emission;  // indexed by feature id
  transition_scores transition{};
  int template_version = feature_template_version;

  struct training_metadata {
    std::uint64_t seed = 0;
    int epochs_run = 0;
    int best_epoch = 0;
    std::string corpus_fingerprint;
  } metadata;

  emission_scores score_positions(
      std::span<const std::vector<std::string>> features_per_position) const;
};

inline constexpr int model_format_version = 1;

// Versioned plain-text format; canonical (features sorted by name, shortest
// round-trip doubles), so identical models serialize to identical bytes.
std::string serialize_model(const tagger_model& model);
tagger_model deserialize_model(std::string_view text);
void save_model(const tagger_model& model, const std::filesystem::path& path);
tagger_model load_model(const std::filesystem::path& path);

// Feature extraction + constrained decode for one token sequence.
tagged_sentence tag_tokens(const tagger_model& model,
                    std::vector<std::string> tokens, const gazetteer& g);

// Gazetteer longest-match baseline: municipality beats street on equal
// match length; five-digit and 3+2-digit tokens become postcodes; leftover
// digit and digit/slash tokens become house numbers.
tagged_sentence rule_baseline(std::vector<std::string> tokens,
                              const gazetteer& g);

}  // namespace addrtag
