// Copyright 2026 The addrtag Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "addrtag/error.hpp"
#include "addrtag/generate.hpp"
#include "addrtag/model.hpp"
#include "addrtag/train.hpp"
#include "common/test_support.hpp"

using namespace addrtag;

namespace {

gazetteer test_gazetteer() {
  return gazetteer::from_lists(
      {"Záhumenská", "Hlavná", "Bauerová", "Nábrežie mládeže"},
      {"Stupava", "Košice", "Kalša", "Spišská Nová Ves"});
}

// Disjoint vocabularies per entity type: linearly separable.
corpus toy_corpus(std::size_t sentences, std::uint64_t seed) {
  const std::vector<std::string> streets = {"alfa", "beta", "gama"};
  const std::vector<std::string> munis = {"mesto1", "mesto2", "mesto3"};
  const std::vector<std::string> fillers = {"fill1", "fill2"};
  rng r(seed);
  corpus c;
  c.name = "toy";
  for (std::size_t i = 0; i < sentences; ++i) {
    tagged_sentence s;
    s.tokens = {fillers[r.below(fillers.size())],
                streets[r.below(streets.size())],
                munis[r.below(munis.size())]};
    s.tags = {tag::outside, tag::b_street, tag::b_municipality};
    c.sentences.push_back(std::move(s));
  }
  return c;
}

tagger_model train_small(const gazetteer& g) {
  auto bank = template_bank::load(test_support::data_dir() / "templates" /
                                  "bank.jsonl");
  auto cfg = generation_config::for_pattern(1, 50, 5, false);
  corpus train_c = generate(cfg, g, bank);
  auto cfg_val = generation_config::for_pattern(1, 20, 6, false);
  corpus val_c = generate(cfg_val, g, bank);
  train_config tc;
  tc.seed = 1;
  return train(train_c, val_c, g, tc);
}

}  // namespace

TEST_SUITE("tagger") {

TEST_CASE("separable toy corpus reaches 100% training accuracy") {
  auto g = gazetteer::from_lists({"zzz"}, {"qqq"});  // unrelated names
  corpus train_c = toy_corpus(40, 3);
  corpus val_c = toy_corpus(10, 4);
  train_config cfg;
  cfg.seed = 7;
  auto model = train(train_c, val_c, g, cfg);
  CHECK(token_accuracy_on(model, train_c, g) == 1.0);
  CHECK(model.metadata.epochs_run <= 15);
}

TEST_CASE("pattern-1 training corpus is memorized within 15 epochs") {
  auto g = test_gazetteer();
  auto bank = template_bank::load(test_support::data_dir() / "templates" /
                                  "bank.jsonl");
  corpus train_c = generate(generation_config::for_pattern(1, 50, 5, false),
                            g, bank);
  corpus val_c = generate(generation_config::for_pattern(1, 20, 6, false),
                          g, bank);
  train_config cfg;
  cfg.seed = 1;
  auto model = train(train_c, val_c, g, cfg);
  CHECK(token_accuracy_on(model, train_c, g) == 1.0);
}

TEST_CASE("training is deterministic down to the serialized bytes") {
  auto g = test_gazetteer();
  corpus train_c = toy_corpus(30, 8);
  corpus val_c = toy_corpus(10, 9);
  train_config cfg;
  cfg.seed = 21;
  auto a = train(train_c, val_c, g, cfg);
  auto b = train(train_c, val_c, g, cfg);
  CHECK(serialize_model(a) == serialize_model(b));
}

TEST_CASE("constant validation accuracy returns the first epoch") {
  auto g = gazetteer::from_lists({"zzz"}, {"qqq"});
  corpus train_c = toy_corpus(30, 8);
  // Validation sentences share no vocabulary with training: every epoch
  // scores identically, so no epoch after the first ever improves.
  corpus val_c;
  val_c.name = "val";
  for (int i = 0; i < 5; ++i) {
    val_c.sentences.push_back(tagged_sentence::make(
        {"unseen" + std::to_string(i)}, {tag::outside}));
  }
  train_config cfg;
  cfg.seed = 2;
  cfg.early_stop_patience = 3;
  auto model = train(train_c, val_c, g, cfg);
  CHECK(model.metadata.best_epoch == 1);
  CHECK(model.metadata.epochs_run == 4);  // 1 best + 3 patience
}

TEST_CASE("warm start: carries weights, rejects template mismatches") {
  auto g = gazetteer::from_lists({"zzz"}, {"qqq"});
  corpus train_c = toy_corpus(30, 8);
  corpus val_c = toy_corpus(10, 9);
  train_config cfg;
  cfg.seed = 21;
  auto base = train(train_c, val_c, g, cfg);

  // Continuing from an already-converged model keeps it converged.
  auto continued = train(train_c, val_c, g, cfg, &base);
  CHECK(token_accuracy_on(continued, train_c, g) == 1.0);

  auto stale = base;
  stale.template_version = 99;
  CHECK_THROWS_AS(train(train_c, val_c, g, cfg, &stale), error);
}

TEST_CASE("empty corpora and bad configs are rejected") {
  auto g = test_gazetteer();
  corpus empty;
  corpus some = toy_corpus(5, 1);
  train_config cfg;
  CHECK_THROWS_AS(train(empty, some, g, cfg), error);
  CHECK_THROWS_AS(train(some, empty, g, cfg), error);
  cfg.epochs = 0;
  CHECK_THROWS_AS(train(some, some, g, cfg), error);
}

TEST_CASE("model round-trips through disk with identical behaviour") {
  auto g = test_gazetteer();
  auto model = train_small(g);
  test_support::temp_dir dir;
  auto path = dir.file("model.txt");
  save_model(model, path);
  auto loaded = load_model(path);

  CHECK(serialize_model(loaded) == serialize_model(model));

  auto bank = template_bank::load(test_support::data_dir() / "templates" /
                                  "bank.jsonl");
  corpus probe = generate(generation_config::for_pattern(2, 30, 77, true), g,
                          bank);
  for (const auto& s : probe.sentences) {
    CHECK(tag_tokens(model, s.tokens, g).tags ==
          tag_tokens(loaded, s.tokens, g).tags);
  }
}

TEST_CASE("corrupt and mismatched model files are refused") {
  auto g = test_gazetteer();
  auto model = train_small(g);
  std::string text = serialize_model(model);

  // Truncation.
  try {
    deserialize_model(text.substr(0, text.size() / 2));
    FAIL("expected corrupt-file error");
  } catch (const model_format_error& e) {
    CHECK(e.which() == model_format_error::kind::corrupt);
  }

  // Unsupported version.
  std::string version99 = text;
  version99.replace(0, std::string("addrtag-model 1").size(),
                    "addrtag-model 99");
  try {
    deserialize_model(version99);
    FAIL("expected version mismatch");
  } catch (const model_format_error& e) {
    CHECK(e.which() == model_format_error::kind::version_mismatch);
  }

  CHECK_THROWS_AS(deserialize_model("not a model"), model_format_error);
}

TEST_CASE("tagged output is always BIO-valid") {
  auto g = test_gazetteer();
  auto model = train_small(g);
  rng r(31);
  for (int trial = 0; trial < 100; ++trial) {
    auto s = test_support::random_valid_sentence(r);
    auto out = tag_tokens(model, s.tokens, g);
    CHECK(!first_bio_violation(out.tags));
  }
  CHECK_THROWS_AS(tag_tokens(model, {}, g), error);
}

TEST_CASE("rule baseline on the published examples") {
  auto g = test_gazetteer();
  auto a = rule_baseline({"Stupava", "Záhumenská", "834"}, g);
  CHECK(a.tags == std::vector<tag>{tag::b_municipality, tag::b_street,
                                   tag::b_housenumber});
  auto b = rule_baseline({"Košice", "Hlavná", "7"}, g);
  CHECK(b.tags == std::vector<tag>{tag::b_municipality, tag::b_street,
                                   tag::b_housenumber});
  auto c = rule_baseline({"841", "04"}, g);
  CHECK(c.tags == std::vector<tag>{tag::b_postcode, tag::i_postcode});
  auto d = rule_baseline({"ehm", "no"}, g);
  CHECK(d.tags == std::vector<tag>{tag::outside, tag::outside});
  auto e = rule_baseline({"Spišská", "Nová", "Ves", "12/3"}, g);
  CHECK(e.tags == std::vector<tag>{tag::b_municipality, tag::i_municipality,
                                   tag::i_municipality, tag::b_housenumber});
}

}  // TEST_SUITE
