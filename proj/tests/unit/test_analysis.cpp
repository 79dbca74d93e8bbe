// Copyright 2026 The addrtag Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "addrtag/analysis.hpp"
#include "addrtag/error.hpp"
#include "common/test_support.hpp"

using namespace addrtag;

namespace {

tagged_sentence address(const std::vector<std::string>& tokens,
                        const std::vector<tag>& tags) {
  return tagged_sentence::make(tokens, tags);
}

// Sentences where the municipality comes first mis-tag it as a street;
// municipality-after-street sentences are clean.
std::pair<corpus, corpus> order_fixture() {
  corpus gold, pred;
  for (int i = 0; i < 6; ++i) {
    gold.sentences.push_back(address(
        {"Stupava", "Hlavná", "7"},
        {tag::b_municipality, tag::b_street, tag::b_housenumber}));
    pred.sentences.push_back(address(
        {"Stupava", "Hlavná", "7"},
        {tag::b_street, tag::b_street, tag::b_housenumber}));
  }
  for (int i = 0; i < 6; ++i) {
    gold.sentences.push_back(address(
        {"Hlavná", "7", "Stupava"},
        {tag::b_street, tag::b_housenumber, tag::b_municipality}));
    pred.sentences.push_back(address(
        {"Hlavná", "7", "Stupava"},
        {tag::b_street, tag::b_housenumber, tag::b_municipality}));
  }
  return {gold, pred};
}

}  // namespace

TEST_SUITE("analysis") {

TEST_CASE("perfect predictions give an empty report") {
  rng r(6);
  corpus c = test_support::random_valid_corpus(r, 20);
  CHECK(mine_error_patterns(c, c).patterns.empty());
}

TEST_CASE("order-conditioned confusion outranks the unconditioned rate") {
  auto [gold, pred] = order_fixture();
  auto report = mine_error_patterns(gold, pred);
  REQUIRE(!report.patterns.empty());

  const std::string conditioned =
      "gold B-Municipality -> predicted B-Street | municipality precedes "
      "street";
  const std::string unconditioned =
      "gold B-Municipality -> predicted B-Street";

  CHECK(report.patterns.front().description == conditioned);
  CHECK(report.patterns.front().rate == 1.0);
  CHECK(report.patterns.front().support == 6);

  std::size_t cond_pos = report.patterns.size();
  std::size_t plain_pos = report.patterns.size();
  for (std::size_t i = 0; i < report.patterns.size(); ++i) {
    if (report.patterns[i].description == conditioned) cond_pos = i;
    if (report.patterns[i].description == unconditioned) plain_pos = i;
  }
  REQUIRE(cond_pos < report.patterns.size());
  REQUIRE(plain_pos < report.patterns.size());
  CHECK(cond_pos < plain_pos);
  CHECK(report.patterns[plain_pos].rate == 0.5);  // 6 errors / 12 gold tokens
}

TEST_CASE("the follows-side split is dropped when it has no errors") {
  auto [gold, pred] = order_fixture();
  auto report = mine_error_patterns(gold, pred);
  for (const auto& p : report.patterns) {
    CHECK(p.description.find("municipality follows street") ==
          std::string::npos);
    CHECK(p.support >= 1);
  }
}

TEST_CASE("casing split: errors concentrated on lowercase tokens") {
  corpus gold, pred;
  for (int i = 0; i < 5; ++i) {
    // Lowercase municipality token, mis-tagged.
    gold.sentences.push_back(address({"stupava"}, {tag::b_municipality}));
    pred.sentences.push_back(address({"stupava"}, {tag::b_street}));
    // Capitalized municipality token, correct.
    gold.sentences.push_back(address({"Stupava"}, {tag::b_municipality}));
    pred.sentences.push_back(address({"Stupava"}, {tag::b_municipality}));
  }
  auto report = mine_error_patterns(gold, pred);
  double lower_rate = -1.0;
  bool saw_capitalized = false;
  for (const auto& p : report.patterns) {
    if (p.description.find("| gold token lowercase") != std::string::npos) {
      lower_rate = p.rate;
    }
    if (p.description.find("| gold token capitalized") != std::string::npos) {
      saw_capitalized = true;
    }
  }
  CHECK(lower_rate == 1.0);
  CHECK(!saw_capitalized);  // no capitalized-token errors, so no pattern
}

TEST_CASE("top-k limits the detailed pairs") {
  corpus gold, pred;
  // Three distinct confusion pairs with different frequencies.
  auto push = [&](tag g, tag p, int n) {
    for (int i = 0; i < n; ++i) {
      gold.sentences.push_back(address({"x"}, {g}));
      pred.sentences.push_back(address({"x"}, {p}));
    }
  };
  push(tag::b_municipality, tag::b_street, 5);
  push(tag::outside, tag::b_municipality, 3);
  push(tag::b_housenumber, tag::outside, 1);
  auto top1 = mine_error_patterns(gold, pred, 1);
  for (const auto& p : top1.patterns) {
    CHECK(p.description.find("gold B-Municipality -> predicted B-Street") !=
          std::string::npos);
  }
  auto all = mine_error_patterns(gold, pred, 10);
  CHECK(all.patterns.size() > top1.patterns.size());
}

TEST_CASE("misaligned corpora are rejected") {
  corpus gold, pred;
  gold.sentences.push_back(address({"a"}, {tag::outside}));
  CHECK_THROWS_AS(mine_error_patterns(gold, pred), validation_error);
}

}  // TEST_SUITE
