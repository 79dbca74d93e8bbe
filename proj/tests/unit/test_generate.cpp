// Copyright 2026 The addrtag Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <set>

#include "addrtag/corpus_io.hpp"
#include "addrtag/error.hpp"
#include "addrtag/generate.hpp"
#include "addrtag/utf8.hpp"
#include "common/test_support.hpp"

using namespace addrtag;

namespace {

gazetteer test_gazetteer() {
  return gazetteer::from_lists(
      {"Záhumenská", "Hlavná", "Bauerová", "Nábrežie mládeže"},
      {"Stupava", "Košice", "Kalša", "Spišská Nová Ves"});
}

template_bank repo_bank() {
  return template_bank::load(test_support::data_dir() / "templates" /
                             "bank.jsonl");
}

std::multiset<entity_type> entity_multiset(const tagged_sentence& s) {
  std::multiset<entity_type> out;
  for (const auto& span : extract_entities(s)) out.insert(span.type);
  return out;
}

}  // namespace

TEST_SUITE("generation") {

TEST_CASE("render_template replaces placeholders and assigns B/I") {
  auto g = gazetteer::from_lists({"Záhumenská"}, {"Stupava"});
  sentence_template t = {
      template_element::placeholder(slot::municipalityname),
      template_element::placeholder(slot::streetname),
      template_element::literal("834", tag::b_housenumber),
  };
  generation_config cfg;
  rng r(1);
  auto s = render_template(t, g, cfg, r, builtin_noise_lexicon());
  CHECK(s.tokens == std::vector<std::string>{"Stupava", "Záhumenská", "834"});
  CHECK(s.tags == std::vector<tag>{tag::b_municipality, tag::b_street,
                                   tag::b_housenumber});
}

TEST_CASE("multi-word street names get B-Street I-Street") {
  auto g = gazetteer::from_lists({"Nábrežie mládeže"}, {"Košice"});
  sentence_template t = {template_element::placeholder(slot::streetname)};
  generation_config cfg;
  rng r(1);
  auto s = render_template(t, g, cfg, r, builtin_noise_lexicon());
  CHECK(s.tokens == std::vector<std::string>{"Nábrežie", "mládeže"});
  CHECK(s.tags == std::vector<tag>{tag::b_street, tag::i_street});
}

TEST_CASE("noise slots render O-tagged fillers when noise is on") {
  auto g = test_gazetteer();
  sentence_template t = {
      template_element::placeholder(slot::noise),
      template_element::placeholder(slot::municipalityname),
  };
  generation_config cfg;
  cfg.with_noise = true;
  rng r(4);
  auto s = render_template(t, g, cfg, r, builtin_noise_lexicon());
  REQUIRE(s.size() >= 2);
  CHECK(s.tags.front() == tag::outside);

  generation_config off;
  rng r2(4);
  auto without = render_template(t, g, off, r2, builtin_noise_lexicon());
  CHECK(extract_entities(without).size() == 1);
}

TEST_CASE("render errors: empty rendering") {
  auto g = test_gazetteer();
  sentence_template empty_render = {template_element::placeholder(slot::noise)};
  generation_config cfg;  // noise off, so the slot renders to nothing
  rng r(1);
  CHECK_THROWS_AS(render_template(empty_render, g, cfg, r,
                                  builtin_noise_lexicon()),
                  error);
}

TEST_CASE("pattern flag combinations are fixed") {
  auto p1 = generation_config::for_pattern(1, 10, 0, false);
  CHECK(p1.shuffle);
  CHECK(p1.omit);
  CHECK(!p1.verbal_housenumber);
  auto p5 = generation_config::for_pattern(5, 10, 0, true);
  CHECK(p5.shuffle);
  CHECK(p5.verbal_housenumber);
  CHECK(!p5.omit);
  CHECK(p5.with_noise);
  auto p6 = generation_config::for_pattern(6, 10, 0, false);
  CHECK(p6.duplicate_municipality);
  CHECK(p6.shuffle);

  CHECK_THROWS_AS(generation_config::for_pattern(7, 10, 0, false), error);
  CHECK_THROWS_AS(generation_config::for_pattern(0, 10, 0, false), error);

  // generate() rejects flags that disagree with the pattern.
  auto bank = repo_bank();
  auto g = test_gazetteer();
  generation_config tampered = generation_config::for_pattern(4, 5, 1, false);
  tampered.shuffle = true;
  CHECK_THROWS_AS(generate(tampered, g, bank), error);
}

TEST_CASE("pattern 4 without omission yields exactly its three parts") {
  auto bank = repo_bank();
  auto g = test_gazetteer();
  auto cfg = generation_config::for_pattern(4, 50, 123, false);
  corpus c = generate(cfg, g, bank);
  REQUIRE(c.size() == 50);
  std::multiset<entity_type> want = {entity_type::municipality,
                                     entity_type::housenumber,
                                     entity_type::postcode};
  for (const auto& s : c.sentences) CHECK(entity_multiset(s) == want);
}

TEST_CASE("pattern 5 house numbers are verbal, sometimes multi-token") {
  auto bank = repo_bank();
  auto g = test_gazetteer();
  auto cfg = generation_config::for_pattern(5, 120, 9, false);
  corpus c = generate(cfg, g, bank);
  bool saw_multi_token = false;
  for (const auto& s : c.sentences) {
    for (const auto& span : extract_entities(s)) {
      if (span.type != entity_type::housenumber) continue;
      if (span.end > span.start) saw_multi_token = true;
      for (std::size_t i = span.start; i <= span.end; ++i) {
        for (char ch : s.tokens[i]) {
          CHECK(!(ch >= '0' && ch <= '9'));
        }
      }
    }
  }
  CHECK(saw_multi_token);
}

TEST_CASE("pattern 6 mentions the same municipality twice") {
  auto bank = repo_bank();
  auto g = test_gazetteer();
  auto cfg = generation_config::for_pattern(6, 40, 31, false);
  corpus c = generate(cfg, g, bank);
  for (const auto& s : c.sentences) {
    auto spans = extract_entities(s);
    std::vector<std::string> names;
    for (const auto& span : spans) {
      if (span.type != entity_type::municipality) continue;
      std::string name;
      for (std::size_t i = span.start; i <= span.end; ++i) {
        if (i > span.start) name += ' ';
        name += s.tokens[i];
      }
      names.push_back(name);
    }
    REQUIRE(names.size() == 2);
    CHECK(names[0] == names[1]);
  }
}

TEST_CASE("entity multisets match declared parts when omission is off") {
  auto bank = repo_bank();
  auto g = test_gazetteer();
  for (int pattern : {4, 5, 6}) {  // the patterns without omission
    auto parts = pattern_parts(pattern);
    std::multiset<entity_type> want(parts.begin(), parts.end());
    auto cfg = generation_config::for_pattern(pattern, 30,
                                              static_cast<unsigned>(pattern),
                                              false);
    for (const auto& s : generate(cfg, g, bank).sentences) {
      CHECK(entity_multiset(s) == want);
    }
  }
}

TEST_CASE("property: every generated sentence is BIO-valid") {
  auto bank = repo_bank();
  auto g = test_gazetteer();
  for (int pattern = 1; pattern <= 6; ++pattern) {
    for (bool noise : {false, true}) {
      auto cfg = generation_config::for_pattern(
          pattern, 100, 1000 + static_cast<unsigned>(pattern), noise);
      corpus c = generate(cfg, g, bank);
      REQUIRE(c.size() == 100);
      for (const auto& s : c.sentences) {
        CHECK(is_bio_valid(s.tags));
        CHECK(!s.tokens.empty());
      }
    }
  }
}

TEST_CASE("same seed, same bytes; different seed, different draw") {
  auto bank = repo_bank();
  auto g = test_gazetteer();
  auto cfg = generation_config::for_pattern(1, 200, 77, true);
  auto once = serialize_corpus(generate(cfg, g, bank), corpus_format::jsonl);
  auto twice = serialize_corpus(generate(cfg, g, bank), corpus_format::jsonl);
  CHECK(once == twice);
  cfg.seed = 78;
  CHECK(serialize_corpus(generate(cfg, g, bank), corpus_format::jsonl) != once);
}

TEST_CASE("lowercase_duplicate doubles the corpus, originals first") {
  corpus c;
  c.sentences.push_back(
      tagged_sentence::make({"Košice"}, {tag::b_municipality}));
  corpus doubled = lowercase_duplicate(c);
  REQUIRE(doubled.size() == 2);
  CHECK(doubled.sentences[0].tokens == std::vector<std::string>{"Košice"});
  CHECK(doubled.sentences[1].tokens == std::vector<std::string>{"košice"});
  CHECK(doubled.sentences[1].tags == doubled.sentences[0].tags);

  CHECK(lowercase_duplicate(corpus{}).sentences.empty());
}

TEST_CASE("lowercase_duplicate is idempotent on its lowercase half") {
  rng r(5);
  corpus c = test_support::random_valid_corpus(r, 40);
  corpus doubled = lowercase_duplicate(c);
  REQUIRE(doubled.size() == 80);
  for (std::size_t i = 40; i < 80; ++i) {
    const auto& s = doubled.sentences[i];
    for (const auto& token : s.tokens) CHECK(utf8::lower(token) == token);
    CHECK(is_bio_valid(s.tags));
  }
  // Lowercasing the lowercase half again changes nothing.
  corpus half;
  half.sentences.assign(doubled.sentences.begin() + 40,
                        doubled.sentences.end());
  corpus again = lowercase_duplicate(half);
  for (std::size_t i = 0; i < 40; ++i) {
    CHECK(again.sentences[40 + i] == half.sentences[i]);
  }
}

TEST_CASE("split sizes follow floor arithmetic") {
  rng r(8);
  corpus c100 = test_support::random_valid_corpus(r, 100);
  auto s100 = split_corpus(c100, 0.8, 0.15, 0.05, 3);
  CHECK(s100.train.size() == 80);
  CHECK(s100.validation.size() == 15);
  CHECK(s100.test.size() == 5);

  corpus c20 = test_support::random_valid_corpus(r, 20);
  auto s20 = split_corpus(c20, 0.8, 0.15, 0.05, 3);
  CHECK(s20.train.size() == 16);
  CHECK(s20.validation.size() == 3);
  CHECK(s20.test.size() == 1);
}

TEST_CASE("split is deterministic and partitions the corpus") {
  rng r(21);
  corpus c = test_support::random_valid_corpus(r, 60);
  auto a = split_corpus(c, 0.8, 0.15, 0.05, 99);
  auto b = split_corpus(c, 0.8, 0.15, 0.05, 99);
  CHECK(a.train.sentences == b.train.sentences);
  CHECK(a.validation.sentences == b.validation.sentences);
  CHECK(a.test.sentences == b.test.sentences);

  std::multiset<std::string> original;
  for (const auto& s : c.sentences) {
    original.insert(serialize_corpus(corpus{"", {s}}, corpus_format::jsonl));
  }
  std::multiset<std::string> recombined;
  for (const corpus* part : {&a.train, &a.validation, &a.test}) {
    for (const auto& s : part->sentences) {
      recombined.insert(serialize_corpus(corpus{"", {s}}, corpus_format::jsonl));
    }
  }
  CHECK(original == recombined);
}

TEST_CASE("split rejects bad inputs") {
  rng r(2);
  corpus small = test_support::random_valid_corpus(r, 19);
  CHECK_THROWS_AS(split_corpus(small, 0.8, 0.15, 0.05, 1), error);
  corpus ok = test_support::random_valid_corpus(r, 30);
  CHECK_THROWS_AS(split_corpus(ok, 0.8, 0.3, 0.05, 1), error);
}

TEST_CASE("sharded generation is deterministic and keeps the contract") {
  auto bank = repo_bank();
  auto g = test_gazetteer();
  auto cfg = generation_config::for_pattern(3, 101, 55, true);
  corpus a = generate_sharded(cfg, g, bank, 4);
  corpus b = generate_sharded(cfg, g, bank, 4);
  CHECK(a.size() == 101);
  CHECK(serialize_corpus(a, corpus_format::jsonl) ==
        serialize_corpus(b, corpus_format::jsonl));
  for (const auto& s : a.sentences) CHECK(is_bio_valid(s.tags));

  // Thread count does not matter; shard layout does.
  corpus c = generate_sharded(cfg, g, bank, 8);
  CHECK(c.size() == 101);
  CHECK_THROWS_AS(generate_sharded(cfg, g, bank, 0), error);
}

TEST_CASE("verbal house numbers") {
  CHECK(verbalize_house_number(7) == std::vector<std::string>{"sedem"});
  CHECK(verbalize_house_number(44) ==
        std::vector<std::string>{"štyridsaťštyri"});
  CHECK(verbalize_house_number(834) ==
        std::vector<std::string>{"osemstotridsaťštyri"});
  CHECK_THROWS_AS(verbalize_house_number(0), error);
  CHECK_THROWS_AS(verbalize_house_number(1000), error);
}

TEST_CASE("template bank covers all six patterns with enough frames") {
  auto bank = repo_bank();
  for (int pattern = 1; pattern <= 6; ++pattern) {
    const auto& frames = bank.for_pattern(pattern);
    CHECK(frames.size() >= 10);
    auto parts = pattern_parts(pattern);
    std::multiset<slot> want;
    for (auto part : parts) {
      switch (part) {
        case entity_type::street: want.insert(slot::streetname); break;
        case entity_type::municipality:
          want.insert(slot::municipalityname);
          break;
        case entity_type::housenumber: want.insert(slot::housenumber); break;
        case entity_type::postcode: want.insert(slot::postcode); break;
      }
    }
    for (const auto& frame : frames) {
      std::multiset<slot> got;
      for (const auto& e : frame) {
        if (e.which == template_element::kind::placeholder &&
            e.placeholder_slot != slot::noise) {
          got.insert(e.placeholder_slot);
        }
      }
      CHECK(got == want);
    }
  }
}

}  // TEST_SUITE
