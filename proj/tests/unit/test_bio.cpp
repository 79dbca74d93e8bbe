// Copyright 2026 The addrtag Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "addrtag/error.hpp"
#include "addrtag/sentence.hpp"
#include "addrtag/tags.hpp"
#include "common/test_support.hpp"

using namespace addrtag;

TEST_SUITE("bio") {

TEST_CASE("tag set: nine labels, stable order, exact parsing") {
  auto tags = all_tags();
  CHECK(tags.size() == 9);
  CHECK(to_string(tag::outside) == "O");
  CHECK(to_string(tag::b_housenumber) == "B-Housenumber");
  CHECK(parse_tag("I-Municipality") == tag::i_municipality);
  CHECK(parse_tag("B-City") == std::nullopt);
  CHECK(parse_tag("b-street") == std::nullopt);  // case-sensitive
  for (std::size_t i = 0; i < tag_count; ++i) {
    CHECK(index_of(tag_at(i)) == i);
    CHECK(parse_tag(to_string(tag_at(i))) == tag_at(i));
  }
  CHECK(entity_of(tag::i_postcode) == entity_type::postcode);
  CHECK(begin_of(entity_type::street) == tag::b_street);
  CHECK(inside_of(entity_type::municipality) == tag::i_municipality);
}

TEST_CASE("validate_bio verdicts") {
  CHECK(!first_bio_violation(std::vector<tag>{tag::b_street, tag::i_street}));
  auto bad = first_bio_violation(std::vector<tag>{tag::outside, tag::i_street});
  REQUIRE(bad.has_value());
  CHECK(*bad == 1);
  // Adjacent begins of different types are fine.
  CHECK(!first_bio_violation(std::vector<tag>{
      tag::b_municipality, tag::b_street, tag::b_housenumber}));
  // I-X after B-Y of another type is not.
  auto cross =
      first_bio_violation(std::vector<tag>{tag::b_street, tag::i_postcode});
  REQUIRE(cross.has_value());
  CHECK(*cross == 1);
  // Leading I-X.
  CHECK(first_bio_violation(std::vector<tag>{tag::i_housenumber}) == 0);
}

TEST_CASE("extract_entities on the noisy lowercase example") {
  auto s = tagged_sentence::make(
      {"Ďalšie", "bauerová", "44", "Košice"},
      {tag::outside, tag::b_street, tag::b_housenumber, tag::b_municipality});
  auto spans = extract_entities(s);
  REQUIRE(spans.size() == 3);
  CHECK(spans[0] == entity_span{entity_type::street, 1, 1});
  CHECK(spans[1] == entity_span{entity_type::housenumber, 2, 2});
  CHECK(spans[2] == entity_span{entity_type::municipality, 3, 3});
}

TEST_CASE("extract_entities: all-O and multi-token runs") {
  auto none = tagged_sentence::make({"a", "b"}, {tag::outside, tag::outside});
  CHECK(extract_entities(none).empty());

  auto postcode =
      tagged_sentence::make({"841", "04"}, {tag::b_postcode, tag::i_postcode});
  auto spans = extract_entities(postcode);
  REQUIRE(spans.size() == 1);
  CHECK(spans[0] == entity_span{entity_type::postcode, 0, 1});
}

TEST_CASE("extract_entities rejects invalid input with the violating index") {
  tagged_sentence s;
  s.tokens = {"x", "y"};
  s.tags = {tag::outside, tag::i_street};
  try {
    extract_entities(s);
    FAIL("expected validation_error");
  } catch (const validation_error& e) {
    CHECK(e.index() == 1);
  }
}

TEST_CASE("tagged_sentence::make enforces the invariants") {
  CHECK_THROWS_AS(tagged_sentence::make({}, {}), validation_error);
  CHECK_THROWS_AS(tagged_sentence::make({"a"}, {tag::outside, tag::outside}),
                  validation_error);
  CHECK_THROWS_AS(tagged_sentence::make({"a b"}, {tag::outside}),
                  validation_error);
  CHECK_THROWS_AS(tagged_sentence::make({""}, {tag::outside}),
                  validation_error);
  CHECK_THROWS_AS(tagged_sentence::make({"x"}, {tag::i_street}),
                  validation_error);
}

TEST_CASE("whitespace tokenization") {
  CHECK(whitespace_tokenize("  Stupava\tZáhumenská  834 \n") ==
        std::vector<std::string>{"Stupava", "Záhumenská", "834"});
  CHECK(whitespace_tokenize("").empty());
  CHECK(whitespace_tokenize(" \t ").empty());
}

TEST_CASE("property: span view round-trips the non-O tags") {
  rng r(2024);
  for (int trial = 0; trial < 200; ++trial) {
    auto s = test_support::random_valid_sentence(r);
    auto spans = extract_entities(s);
    auto rebuilt = tags_from_spans(spans, s.size());
    CHECK(rebuilt == s.tags);
  }
}

TEST_CASE("property: validate_bio accepts iff extract_entities accepts") {
  rng r(77);
  int invalid_seen = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t length = 1 + r.below(6);
    tagged_sentence s;
    for (std::size_t i = 0; i < length; ++i) {
      s.tokens.push_back("t" + std::to_string(i));
      s.tags.push_back(tag_at(r.below(tag_count)));
    }
    bool valid = is_bio_valid(s.tags);
    invalid_seen += valid ? 0 : 1;
    bool extracted = true;
    try {
      extract_entities(s);
    } catch (const validation_error&) {
      extracted = false;
    }
    CHECK(valid == extracted);
  }
  CHECK(invalid_seen > 0);  // the sampler must exercise both branches
}

}  // TEST_SUITE
