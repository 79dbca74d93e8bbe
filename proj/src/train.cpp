// Copyright 2026 The addrtag Authors
// SPDX-License-Identifier: Apache-2.0

#include "addrtag/train.hpp"

#include <numeric>

#include "addrtag/corpus_io.hpp"
#include "addrtag/error.hpp"
#include "addrtag/rng.hpp"
#include "addrtag/util.hpp"

namespace addrtag {

namespace {

struct weight_cell {
  double value = 0.0;
  double accumulated = 0.0;
  std::uint64_t stamp = 0;
};

using cell_row = std::array<weight_cell, tag_count>;

void bump(weight_cell& cell, double delta, std::uint64_t step) {
  cell.accumulated += cell.value * static_cast<double>(step - cell.stamp);
  cell.stamp = step;
  cell.value += delta;
}

double averaged(const weight_cell& cell, std::uint64_t step) {
  if (step == 0) return 0.0;
  double total =
      cell.accumulated + cell.value * static_cast<double>(step - cell.stamp);
  return total / static_cast<double>(step);
}

// Feature ids per position for every sentence, extracted once up front.
using sentence_features = std::vector<std::vector<std::uint32_t>>;

emission_scores score_with(const std::vector<cell_row>& emission,
                           const sentence_features& features) {
  emission_scores scores(features.size());
  for (std::size_t i = 0; i < features.size(); ++i) {
    scores[i].fill(0.0);
    for (std::uint32_t id : features[i]) {
      const cell_row& row = emission[id];
      for (std::size_t t = 0; t < tag_count; ++t) {
        scores[i][t] += row[t].value;
      }
    }
  }
  return scores;
}

double accuracy(const std::vector<std::vector<tag>>& gold,
                const std::vector<std::vector<tag>>& predicted) {
  std::uint64_t correct = 0;
  std::uint64_t total = 0;
  for (std::size_t s = 0; s < gold.size(); ++s) {
    for (std::size_t i = 0; i < gold[s].size(); ++i) {
      total += 1;
      correct += gold[s][i] == predicted[s][i] ? 1 : 0;
    }
  }
  return total == 0 ? 0.0 : static_cast<double>(correct) /
                                static_cast<double>(total);
}

}  // namespace

tagger_model train(const corpus& train_corpus, const corpus& validation_corpus,
                   const gazetteer& g, const train_config& cfg,
                   const tagger_model* warm_start) {
  if (train_corpus.sentences.empty()) throw error("empty training corpus");
  if (validation_corpus.sentences.empty()) {
    throw error("empty validation corpus");
  }
  if (cfg.epochs < 1) throw error("epochs must be at least 1");
  if (warm_start != nullptr &&
      warm_start->template_version != feature_template_version) {
    throw error("feature template version mismatch: model has " +
                std::to_string(warm_start->template_version) + ", expected " +
                std::to_string(feature_template_version));
  }

  tagger_model model;
  model.metadata.seed = cfg.seed;
  model.metadata.corpus_fingerprint =
      fingerprint_hex(serialize_corpus(train_corpus, corpus_format::jsonl));

  // Warm-start features come first so every carried weight keeps a slot
  // even when the new corpus never mentions the feature.
  if (warm_start != nullptr) {
    for (std::uint32_t id = 0; id < warm_start->features.size(); ++id) {
      model.features.intern(warm_start->features.name(id));
    }
  }
  // Intern all training features up front; ids and table sizes stay fixed
  // through the epochs, which keeps everything deterministic.
  std::vector<sentence_features> train_features(train_corpus.size());
  for (std::size_t s = 0; s < train_corpus.size(); ++s) {
    const auto& sentence = train_corpus.sentences[s];
    train_features[s].resize(sentence.size());
    for (std::size_t i = 0; i < sentence.size(); ++i) {
      for (const auto& f : extract_features(sentence.tokens, i, g)) {
        train_features[s][i].push_back(model.features.intern(f));
      }
    }
  }
  std::vector<cell_row> emission(model.features.size());
  std::array<std::array<weight_cell, tag_count>, tag_count> transition{};
  if (warm_start != nullptr) {
    for (std::uint32_t id = 0; id < warm_start->features.size(); ++id) {
      for (std::size_t t = 0; t < tag_count; ++t) {
        emission[id][t].value = warm_start->emission[id][t];
      }
    }
    for (std::size_t a = 0; a < tag_count; ++a) {
      for (std::size_t b = 0; b < tag_count; ++b) {
        transition[a][b].value = warm_start->transition[a][b];
      }
    }
  }

  // Validation features resolve against the fixed map; unseen ones drop out.
  std::vector<sentence_features> val_features(validation_corpus.size());
  std::vector<std::vector<tag>> val_gold(validation_corpus.size());
  for (std::size_t s = 0; s < validation_corpus.size(); ++s) {
    const auto& sentence = validation_corpus.sentences[s];
    val_features[s].resize(sentence.size());
    val_gold[s] = sentence.tags;
    for (std::size_t i = 0; i < sentence.size(); ++i) {
      for (const auto& f : extract_features(sentence.tokens, i, g)) {
        std::int64_t id = model.features.lookup(f);
        if (id >= 0) {
          val_features[s][i].push_back(static_cast<std::uint32_t>(id));
        }
      }
    }
  }

  auto snapshot = [&](std::uint64_t step) {
    std::vector<std::array<double, tag_count>> em(emission.size());
    for (std::size_t f = 0; f < emission.size(); ++f) {
      for (std::size_t t = 0; t < tag_count; ++t) {
        em[f][t] = averaged(emission[f][t], step);
      }
    }
    transition_scores tr{};
    for (std::size_t a = 0; a < tag_count; ++a) {
      for (std::size_t b = 0; b < tag_count; ++b) {
        tr[a][b] = averaged(transition[a][b], step);
      }
    }
    return std::pair(std::move(em), tr);
  };

  auto validation_accuracy = [&](const std::vector<std::array<double, tag_count>>& em,
                                 const transition_scores& tr) {
    std::vector<std::vector<tag>> predicted(val_features.size());
    for (std::size_t s = 0; s < val_features.size(); ++s) {
      emission_scores scores(val_features[s].size());
      for (std::size_t i = 0; i < val_features[s].size(); ++i) {
        scores[i].fill(0.0);
        for (std::uint32_t id : val_features[s][i]) {
          for (std::size_t t = 0; t < tag_count; ++t) {
            scores[i][t] += em[id][t];
          }
        }
      }
      predicted[s] = viterbi_decode(scores, tr).tags;
    }
    return accuracy(val_gold, predicted);
  };

  rng r(cfg.seed);
  std::vector<std::size_t> order(train_corpus.size());
  std::iota(order.begin(), order.end(), std::size_t{0});

  std::uint64_t step = 0;
  double best_accuracy = -1.0;
  int best_epoch = 0;
  int epochs_run = 0;
  int since_best = 0;
  std::vector<std::array<double, tag_count>> best_emission;
  transition_scores best_transition{};

  for (int epoch = 1; epoch <= cfg.epochs; ++epoch) {
    if (cfg.shuffle_each_epoch) r.shuffle(order);
    for (std::size_t s : order) {
      ++step;
      const auto& sentence = train_corpus.sentences[s];
      const auto& features = train_features[s];

      transition_scores raw_transition;
      for (std::size_t a = 0; a < tag_count; ++a) {
        for (std::size_t b = 0; b < tag_count; ++b) {
          raw_transition[a][b] = transition[a][b].value;
        }
      }
      auto decoded =
          viterbi_decode(score_with(emission, features), raw_transition);
      if (decoded.tags == sentence.tags) continue;

      for (std::size_t i = 0; i < sentence.size(); ++i) {
        tag gold = sentence.tags[i];
        tag predicted = decoded.tags[i];
        if (gold != predicted) {
          for (std::uint32_t id : features[i]) {
            bump(emission[id][index_of(gold)], +1.0, step);
            bump(emission[id][index_of(predicted)], -1.0, step);
          }
        }
        if (i > 0) {
          auto gold_prev = index_of(sentence.tags[i - 1]);
          auto pred_prev = index_of(decoded.tags[i - 1]);
          if (gold_prev != pred_prev || gold != predicted) {
            bump(transition[gold_prev][index_of(gold)], +1.0, step);
            bump(transition[pred_prev][index_of(predicted)], -1.0, step);
          }
        }
      }
    }

    epochs_run = epoch;
    auto [em, tr] = snapshot(step);
    double acc = validation_accuracy(em, tr);
    if (acc > best_accuracy) {
      best_accuracy = acc;
      best_epoch = epoch;
      best_emission = std::move(em);
      best_transition = tr;
      since_best = 0;
    } else {
      ++since_best;
      if (since_best >= cfg.early_stop_patience) break;
    }
  }

  model.emission = std::move(best_emission);
  model.transition = best_transition;
  model.metadata.epochs_run = epochs_run;
  model.metadata.best_epoch = best_epoch;
  return model;
}

double token_accuracy_on(const tagger_model& model, const corpus& c,
                         const gazetteer& g) {
  std::uint64_t correct = 0;
  std::uint64_t total = 0;
  for (const auto& sentence : c.sentences) {
    auto predicted = tag_tokens(model, sentence.tokens, g);
    for (std::size_t i = 0; i < sentence.size(); ++i) {
      total += 1;
      correct += predicted.tags[i] == sentence.tags[i] ? 1 : 0;
    }
  }
  if (total == 0) throw error("empty corpus");
  return static_cast<double>(correct) / static_cast<double>(total);
}

}  // namespace addrtag
