// Copyright 2026 The addrtag Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "addrtag/model.hpp"

namespace addrtag {

struct train_config {
  int epochs = 15;
  std::uint64_t seed = 0;
  bool shuffle_each_epoch = true;
  // Stop after this many epochs without a validation accuracy improvement.
  int early_stop_patience = 3;
};

// Averaged structured perceptron. Per sentence: decode with the current
// weights; on a mismatch add +1 to the emission and transition weights of
// the gold path and -1 to those of the predicted path. Running averages are
// kept lazily. After each epoch the averaged snapshot is scored on the
// validation corpus (token accuracy) and the best snapshot is returned.
// Fully deterministic for fixed data, seed and config.
//
// `warm_start` seeds the weight tables from an existing model; its feature
// template version must match the current one.
tagger_model train(const corpus& train_corpus, const corpus& validation_corpus,
                   const gazetteer& g, const train_config& cfg,
                   const tagger_model* warm_start = nullptr);

// Token accuracy of `model` on `c` (decode vs gold tags).
double token_accuracy_on(const tagger_model& model, const corpus& c,
                         const gazetteer& g);

}  // namespace addrtag
