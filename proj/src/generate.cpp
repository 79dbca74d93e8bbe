// Copyright 2026 The addrtag Authors
// SPDX-License-Identifier: Apache-2.0

#include "addrtag/generate.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <map>
#include <numeric>
#include <thread>

#include "addrtag/error.hpp"
#include "addrtag/numerals.hpp"
#include "addrtag/utf8.hpp"

namespace addrtag {

namespace {

const std::vector<std::vector<std::string>>& default_fillers() {
  static const std::vector<std::vector<std::string>> fillers = {
      {"ehm"},          {"no"},           {"takže"},
      {"ďalšie"},       {"moment"},       {"prosím"},
      {"áno"},          {"dobre"},        {"čiže"},
      {"vlastne"},      {"proste"},       {"akože"},
      {"hm"},           {"mhm"},          {"teda"},
      {"tak"},          {"ešte"},         {"počkajte"},
      {"sekundu"},      {"chvíľku"},      {"ako"},
      {"že"},           {"potom"},        {"asi"},
      {"myslím"},       {"neviem"},       {"presne"},
      {"hej"},          {"moment", "prosím"},
      {"ako", "som", "povedal"},          {"to", "je", "všetko"},
      {"ešte", "raz"},
  };
  return fillers;
}

entity_type slot_entity(slot s) {
  switch (s) {
    case slot::streetname:
      return entity_type::street;
    case slot::municipalityname:
      return entity_type::municipality;
    case slot::housenumber:
      return entity_type::housenumber;
    case slot::postcode:
      return entity_type::postcode;
    case slot::noise:
      break;
  }
  throw error("noise slot has no entity type");
}

// One address-part block: the placeholder plus the literals bound to it
// (literals attach to the placeholder that follows them). Trailing literals
// after the last placeholder form a fixed tail.
struct part_block {
  std::vector<template_element> elements;
  bool has_part = false;
  slot part = slot::noise;
};

std::vector<part_block> segment(const sentence_template& t) {
  std::vector<part_block> blocks;
  part_block current;
  for (const auto& e : t) {
    current.elements.push_back(e);
    if (e.which == template_element::kind::placeholder &&
        e.placeholder_slot != slot::noise) {
      current.has_part = true;
      current.part = e.placeholder_slot;
      blocks.push_back(std::move(current));
      current = part_block{};
    }
  }
  if (!current.elements.empty()) blocks.push_back(std::move(current));
  return blocks;
}

void append_value(tagged_sentence& out, const std::vector<std::string>& tokens,
                  entity_type type) {
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    out.tokens.push_back(tokens[i]);
    out.tags.push_back(i == 0 ? begin_of(type) : inside_of(type));
  }
}

void append_filler(tagged_sentence& out, const noise_lexicon& noise, rng& r) {
  const auto& phrase = r.pick(noise.fillers);
  for (const auto& word : phrase) {
    out.tokens.push_back(word);
    out.tags.push_back(tag::outside);
  }
}

struct render_state {
  std::map<slot, std::string> sampled_names;
};

void render_element(const template_element& e, tagged_sentence& out,
                    const gazetteer& g, const generation_config& cfg, rng& r,
                    const noise_lexicon& noise, render_state& state) {
  if (e.which == template_element::kind::literal) {
    out.tokens.push_back(e.text);
    out.tags.push_back(e.literal_tag);
    return;
  }
  switch (e.placeholder_slot) {
    case slot::streetname:
    case slot::municipalityname: {
      auto kind = e.placeholder_slot == slot::streetname
                      ? name_kind::street
                      : name_kind::municipality;
      auto [it, fresh] = state.sampled_names.try_emplace(e.placeholder_slot);
      if (fresh) {
        if (g.size(kind) == 0) throw error("empty gazetteer for slot");
        it->second = g.sample(kind, r);
      }
      append_value(out, whitespace_tokenize(it->second),
                   slot_entity(e.placeholder_slot));
      break;
    }
    case slot::housenumber: {
      if (cfg.verbal_housenumber) {
        int n = static_cast<int>(r.range(1, 999));
        // Spoken numbers come out either as the compound cardinal or read
        // digit by digit; the latter yields multi-token house numbers.
        auto tokens =
            r.chance(0.4) ? slovak_digit_words(n) : verbalize_house_number(n);
        append_value(out, tokens, entity_type::housenumber);
      } else {
        append_value(out, {random_house_number(r, /*allow_composite=*/true)},
                     entity_type::housenumber);
      }
      break;
    }
    case slot::postcode: {
      append_value(out, postcode_tokens(random_postcode(r)),
                   entity_type::postcode);
      break;
    }
    case slot::noise: {
      if (cfg.with_noise && !noise.fillers.empty()) {
        append_filler(out, noise, r);
      }
      break;
    }
  }
}

void check_pattern_flags(const generation_config& cfg) {
  generation_config expected = generation_config::for_pattern(
      cfg.pattern_id, cfg.count, cfg.seed, cfg.with_noise);
  if (std::tie(cfg.shuffle, cfg.omit, cfg.verbal_housenumber,
               cfg.duplicate_municipality) !=
      std::tie(expected.shuffle, expected.omit, expected.verbal_housenumber,
               expected.duplicate_municipality)) {
    throw error("flag combination does not match pattern " +
                std::to_string(cfg.pattern_id));
  }
}

}  // namespace

const noise_lexicon& builtin_noise_lexicon() {
  static const noise_lexicon lexicon{default_fillers()};
  return lexicon;
}

generation_config generation_config::for_pattern(int pattern_id,
                                                 std::size_t count,
                                                 std::uint64_t seed,
                                                 bool with_noise) {
  generation_config cfg;
  cfg.pattern_id = pattern_id;
  cfg.count = count;
  cfg.seed = seed;
  cfg.with_noise = with_noise;
  switch (pattern_id) {
    case 1:
      cfg.shuffle = true;
      cfg.omit = true;
      break;
    case 2:
    case 3:
      cfg.omit = true;
      break;
    case 4:
      break;
    case 5:
      cfg.shuffle = true;
      cfg.verbal_housenumber = true;
      break;
    case 6:
      cfg.shuffle = true;
      cfg.duplicate_municipality = true;
      break;
    default:
      throw error("invalid pattern id " + std::to_string(pattern_id) +
                  " (expected 1..6)");
  }
  return cfg;
}

std::vector<entity_type> pattern_parts(int pattern_id) {
  using e = entity_type;
  switch (pattern_id) {
    case 1:
      return {e::street, e::housenumber, e::municipality, e::postcode};
    case 2:
      return {e::municipality, e::street, e::housenumber, e::postcode};
    case 3:
      return {e::municipality, e::housenumber, e::street, e::postcode};
    case 4:
      return {e::municipality, e::housenumber, e::postcode};
    case 5:
      return {e::street, e::municipality, e::housenumber, e::postcode};
    case 6:
      return {e::municipality, e::housenumber, e::postcode, e::municipality};
    default:
      throw error("invalid pattern id " + std::to_string(pattern_id) +
                  " (expected 1..6)");
  }
}

tagged_sentence render_template(const sentence_template& t, const gazetteer& g,
                                const generation_config& cfg, rng& r,
                                const noise_lexicon& noise) {
  tagged_sentence out;
  render_state state;
  for (const auto& e : t) {
    render_element(e, out, g, cfg, r, noise, state);
  }
  if (out.tokens.empty()) throw error("template rendered to zero tokens");
  if (auto bad = first_bio_violation(out.tags)) {
    throw validation_error("rendered sentence violates BIO at index " +
                               std::to_string(*bad),
                           *bad);
  }
  return out;
}

corpus generate(const generation_config& cfg, const gazetteer& g,
                const template_bank& bank, const noise_lexicon& noise) {
  check_pattern_flags(cfg);
  if (cfg.with_noise && noise.fillers.empty()) {
    throw error("noise requested but the noise lexicon is empty");
  }
  const auto& frames = bank.for_pattern(cfg.pattern_id);
  rng r(cfg.seed);

  corpus out;
  out.name = "pattern-" + std::to_string(cfg.pattern_id) +
             (cfg.with_noise ? "+noise" : "");
  out.sentences.reserve(cfg.count);

  for (std::size_t i = 0; i < cfg.count; ++i) {
    const sentence_template& frame = r.pick(frames);
    auto blocks = segment(frame);

    // Indices of address-part blocks; the tail (if any) stays in place.
    std::vector<std::size_t> part_indices;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].has_part) part_indices.push_back(b);
    }

    std::vector<std::size_t> kept = part_indices;
    if (cfg.omit) {
      // Each part may drop out independently, but a sentence keeps at least
      // one part; redraw when everything got dropped.
      do {
        kept.clear();
        for (std::size_t idx : part_indices) {
          if (!r.chance(omit_probability)) kept.push_back(idx);
        }
      } while (kept.empty());
    }
    if (cfg.shuffle) r.shuffle(kept);

    std::vector<const part_block*> order;
    for (std::size_t idx : kept) order.push_back(&blocks[idx]);
    const part_block* tail =
        !blocks.empty() && !blocks.back().has_part ? &blocks.back() : nullptr;

    // Noise goes between part blocks, including the outer boundaries.
    std::vector<std::size_t> noise_positions;
    if (cfg.with_noise) {
      std::size_t injections = 1 + (r.chance(0.5) ? 1 : 0);
      for (std::size_t k = 0; k < injections; ++k) {
        noise_positions.push_back(r.below(order.size() + 1));
      }
      std::sort(noise_positions.begin(), noise_positions.end());
    }

    tagged_sentence sentence;
    render_state state;
    std::size_t noise_cursor = 0;
    for (std::size_t pos = 0; pos <= order.size(); ++pos) {
      while (noise_cursor < noise_positions.size() &&
             noise_positions[noise_cursor] == pos) {
        append_filler(sentence, noise, r);
        ++noise_cursor;
      }
      if (pos == order.size()) break;
      for (const auto& e : order[pos]->elements) {
        render_element(e, sentence, g, cfg, r, noise, state);
      }
    }
    if (tail != nullptr) {
      for (const auto& e : tail->elements) {
        render_element(e, sentence, g, cfg, r, noise, state);
      }
    }

    if (sentence.tokens.empty()) {
      throw error("template rendered to zero tokens");
    }
    if (auto bad = first_bio_violation(sentence.tags)) {
      throw validation_error("generated sentence violates BIO at index " +
                                 std::to_string(*bad),
                             *bad);
    }
    out.sentences.push_back(std::move(sentence));
  }
  return out;
}

corpus generate_sharded(const generation_config& cfg, const gazetteer& g,
                        const template_bank& bank, std::size_t shards,
                        const noise_lexicon& noise) {
  if (shards == 0) throw error("shard count must be positive");
  check_pattern_flags(cfg);
  std::vector<corpus> parts(shards);
  std::vector<std::thread> workers;
  workers.reserve(shards);
  std::size_t base = cfg.count / shards;
  std::size_t extra = cfg.count % shards;
  for (std::size_t k = 0; k < shards; ++k) {
    generation_config shard_cfg = cfg;
    shard_cfg.count = base + (k < extra ? 1 : 0);
    shard_cfg.seed = rng::derive(cfg.seed, k);
    workers.emplace_back([&parts, k, shard_cfg, &g, &bank, &noise] {
      parts[k] = generate(shard_cfg, g, bank, noise);
    });
  }
  for (auto& w : workers) w.join();
  corpus out;
  out.name = parts.front().name;
  out.sentences.reserve(cfg.count);
  for (auto& part : parts) {
    out.sentences.insert(out.sentences.end(),
                         std::make_move_iterator(part.sentences.begin()),
                         std::make_move_iterator(part.sentences.end()));
  }
  return out;
}

std::vector<std::string> verbalize_house_number(int n) {
  return {slovak_cardinal(n)};
}

corpus lowercase_duplicate(const corpus& c) {
  corpus out;
  out.name = c.name;
  out.sentences.reserve(c.sentences.size() * 2);
  out.sentences = c.sentences;
  for (const auto& s : c.sentences) {
    tagged_sentence copy;
    copy.tags = s.tags;
    copy.tokens.reserve(s.tokens.size());
    for (const auto& tok : s.tokens) copy.tokens.push_back(utf8::lower(tok));
    out.sentences.push_back(std::move(copy));
  }
  return out;
}

corpus_split split_corpus(const corpus& c, double r_train, double r_val,
                          double r_test, std::uint64_t seed) {
  if (std::abs(r_train + r_val + r_test - 1.0) > 1e-9) {
    throw error("split ratios must sum to 1");
  }
  if (r_train < 0 || r_val < 0 || r_test < 0) {
    throw error("split ratios must be non-negative");
  }
  const std::size_t n = c.sentences.size();
  if (n < 20) {
    throw error("corpus too small to split: " + std::to_string(n) +
                " sentences (need at least 20)");
  }
  std::vector<std::size_t> indices(n);
  std::iota(indices.begin(), indices.end(), std::size_t{0});
  rng r(seed);
  r.shuffle(indices);

  auto n_train = static_cast<std::size_t>(
      std::floor(r_train * static_cast<double>(n)));
  auto n_val =
      static_cast<std::size_t>(std::floor(r_val * static_cast<double>(n)));

  corpus_split split;
  split.train.name = c.name + ".train";
  split.validation.name = c.name + ".val";
  split.test.name = c.name + ".test";
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = c.sentences[indices[i]];
    if (i < n_train) {
      split.train.sentences.push_back(s);
    } else if (i < n_train + n_val) {
      split.validation.sentences.push_back(s);
    } else {
      split.test.sentences.push_back(s);
    }
  }
  return split;
}

}  // namespace addrtag
