// Copyright 2026 The addrtag Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <tuple>
#include <vector>

#include "addrtag/gazetteer.hpp"
#include "addrtag/rng.hpp"
#include "addrtag/sentence.hpp"
#include "addrtag/templates.hpp"

namespace addrtag {

// O-tagged filler phrases imitating speech hesitations and transcription
// glitches; each entry is a short word sequence.
struct noise_lexicon {
  std::vector<std::vector<std::string>> fillers;
};

const noise_lexicon& builtin_noise_lexicon();

// The six generation patterns. Pattern 7 of the iteration plan is the
// lowercase duplication transform (`lowercase_duplicate`), not a generator.
//
//   1  Street + HouseNumber + Municipality + Postcode  (shuffle, omit)
//   2  Municipality + Street + HouseNumber + Postcode  (omit)
//   3  Municipality + HouseNumber + Street + Postcode  (omit)
//   4  Municipality + HouseNumber + Postcode
//   5  Street + Municipality + HouseNumber(verbal) + Postcode  (shuffle)
//   6  Municipality + HouseNumber + Postcode, municipality twice  (shuffle)
struct generation_config {
  int pattern_id = 1;
  std::size_t count = 0;
  bool shuffle = false;
  bool omit = false;
  bool with_noise = false;
  bool verbal_housenumber = false;
  bool duplicate_municipality = false;
  std::uint64_t seed = 0;

  // Flags fixed per pattern; only count, seed and noise vary.
  static generation_config for_pattern(int pattern_id, std::size_t count,
                                       std::uint64_t seed, bool with_noise);
};

// Entity parts a pattern emits, in declared order (pattern 6 lists
// municipality twice).
std::vector<entity_type> pattern_parts(int pattern_id);

// Probability an optional part is dropped when omission is on.
inline constexpr double omit_probability = 0.25;

// Renders one template: placeholders are replaced by sampled values (first
// value token B-X, the rest I-X), noise slots by O-tagged fillers. All
// streetname (and municipalityname) slots of one sentence share one sampled
// name, which is what makes a repeated mention a repetition. Throws when a
// needed gazetteer side is empty or the template renders to zero tokens.
tagged_sentence render_template(const sentence_template& t, const gazetteer& g,
                                const generation_config& cfg, rng& r,
                                const noise_lexicon& noise);

// Renders `cfg.count` sentences from the bank's templates for the pattern,
// applying per-sentence omission, shuffling of address-part blocks, and
// noise injection between blocks. Rejects pattern ids outside 1..6.
corpus generate(const generation_config& cfg, const gazetteer& g,
                const template_bank& bank,
                const noise_lexicon& noise = builtin_noise_lexicon());

// Same contract, with `cfg.count` spread over `shards` parallel workers.
// Shard k draws from a stream derived from (cfg.seed, k) and the outputs
// concatenate in shard order, so the result is a pure function of the
// arguments no matter how the workers are scheduled. The sentence stream
// differs from the single-shard one.
corpus generate_sharded(const generation_config& cfg, const gazetteer& g,
                        const template_bank& bank, std::size_t shards,
                        const noise_lexicon& noise = builtin_noise_lexicon());

// Verbal form of a house number, standard compound orthography (one token).
std::vector<std::string> verbalize_house_number(int n);

// Appends a copy of every sentence with lowercased tokens and unchanged
// tags: originals first, then all copies.
corpus lowercase_duplicate(const corpus& c);

struct corpus_split {
  corpus train;
  corpus validation;
  corpus test;
};

// Seeded shuffle, then contiguous slices of floor(r_train*N), floor(r_val*N)
// and the remainder. Ratios must sum to 1; N must be at least 20.
corpus_split split_corpus(const corpus& c, double r_train, double r_val,
                          double r_test, std::uint64_t seed);

}  // namespace addrtag
