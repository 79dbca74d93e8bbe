// Copyright 2026 The addrtag Authors
// SPDX-License-Identifier: Apache-2.0

#include "addrtag/model.hpp"

#include <algorithm>
#include <sstream>

#include "addrtag/error.hpp"
#include "addrtag/util.hpp"

namespace addrtag {

std::uint32_t feature_map::intern(const std::string& name) {
  auto [it, fresh] = ids_.try_emplace(name,
                                      static_cast<std::uint32_t>(names_.size()));
  if (fresh) names_.push_back(name);
  return it->second;
}

std::int64_t feature_map::lookup(const std::string& name) const {
  auto it = ids_.find(name);
  return it == ids_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

emission_scores tagger_model::score_positions(
    std::span<const std::vector<std::string>> features_per_position) const {
  emission_scores scores(features_per_position.size());
  for (std::size_t i = 0; i < features_per_position.size(); ++i) {
    scores[i].fill(0.0);
    for (const auto& feature : features_per_position[i]) {
      std::int64_t id = features.lookup(feature);
      if (id < 0) continue;
      const auto& weights = emission[static_cast<std::size_t>(id)];
      for (std::size_t t = 0; t < tag_count; ++t) scores[i][t] += weights[t];
    }
  }
  return scores;
}

std::string serialize_model(const tagger_model& model) {
  std::string out;
  out += "addrtag-model " + std::to_string(model_format_version) + "\n";
  out += "feature-template " + std::to_string(model.template_version) + "\n";
  out += "tags";
  for (tag t : all_tags()) {
    out += ' ';
    out += to_string(t);
  }
  out += '\n';
  out += "meta seed " + std::to_string(model.metadata.seed) + "\n";
  out += "meta epochs " + std::to_string(model.metadata.epochs_run) + "\n";
  out += "meta best-epoch " + std::to_string(model.metadata.best_epoch) + "\n";
  out += "meta corpus-fingerprint " +
         (model.metadata.corpus_fingerprint.empty()
              ? std::string("-")
              : model.metadata.corpus_fingerprint) +
         "\n";
  out += "transitions\n";
  for (std::size_t from = 0; from < tag_count; ++from) {
    for (std::size_t to = 0; to < tag_count; ++to) {
      out += to == 0 ? "" : " ";
      out += format_double(model.transition[from][to]);
    }
    out += '\n';
  }
  // Canonical order: features sorted by name.
  std::vector<std::uint32_t> order(model.features.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return model.features.name(a) < model.features.name(b);
  });
  out += "features " + std::to_string(order.size()) + "\n";
  for (std::uint32_t id : order) {
    out += model.features.name(id);
    for (double w : model.emission[id]) {
      out += ' ';
      out += format_double(w);
    }
    out += '\n';
  }
  return out;
}

namespace {

std::vector<std::string> next_fields(std::istringstream& in,
                                     const char* what) {
  std::string line;
  if (!std::getline(in, line)) {
    throw model_format_error(std::string("truncated model file: missing ") +
                                 what,
                             model_format_error::kind::corrupt);
  }
  return whitespace_tokenize(line);
}

}  // namespace

tagger_model deserialize_model(std::string_view text) {
  std::istringstream in{std::string(text)};
  auto magic = next_fields(in, "header");
  if (magic.size() != 2 || magic[0] != "addrtag-model") {
    throw model_format_error("not a model file",
                             model_format_error::kind::corrupt);
  }
  if (magic[1] != std::to_string(model_format_version)) {
    throw model_format_error("unsupported model format version " + magic[1],
                             model_format_error::kind::version_mismatch);
  }

  tagger_model model;
  auto tmpl = next_fields(in, "feature-template");
  if (tmpl.size() != 2 || tmpl[0] != "feature-template") {
    throw model_format_error("missing feature-template line",
                             model_format_error::kind::corrupt);
  }
  model.template_version = static_cast<int>(parse_double(tmpl[1]));

  auto tags_line = next_fields(in, "tag list");
  if (tags_line.size() != tag_count + 1 || tags_line[0] != "tags") {
    throw model_format_error("missing tag list",
                             model_format_error::kind::corrupt);
  }
  for (std::size_t i = 0; i < tag_count; ++i) {
    if (tags_line[i + 1] != to_string(tag_at(i))) {
      throw model_format_error("unexpected tag order in model file",
                               model_format_error::kind::corrupt);
    }
  }

  for (const char* key : {"seed", "epochs", "best-epoch", "corpus-fingerprint"}) {
    auto fields = next_fields(in, key);
    if (fields.size() != 3 || fields[0] != "meta" || fields[1] != key) {
      throw model_format_error(std::string("missing meta line: ") + key,
                               model_format_error::kind::corrupt);
    }
    try {
      if (fields[1] == std::string("seed")) {
        model.metadata.seed = std::stoull(fields[2]);
      } else if (fields[1] == std::string("epochs")) {
        model.metadata.epochs_run = std::stoi(fields[2]);
      } else if (fields[1] == std::string("best-epoch")) {
        model.metadata.best_epoch = std::stoi(fields[2]);
      } else if (fields[2] != "-") {
        model.metadata.corpus_fingerprint = fields[2];
      }
    } catch (const std::exception&) {
      throw model_format_error(std::string("malformed meta value: ") + key,
                               model_format_error::kind::corrupt);
    }
  }

  auto trans_header = next_fields(in, "transitions");
  if (trans_header.size() != 1 || trans_header[0] != "transitions") {
    throw model_format_error("missing transitions block",
                             model_format_error::kind::corrupt);
  }
  for (std::size_t from = 0; from < tag_count; ++from) {
    auto row = next_fields(in, "transition row");
    if (row.size() != tag_count) {
      throw model_format_error("malformed transition row",
                               model_format_error::kind::corrupt);
    }
    for (std::size_t to = 0; to < tag_count; ++to) {
      model.transition[from][to] = parse_double(row[to]);
    }
  }

  auto feat_header = next_fields(in, "feature count");
  if (feat_header.size() != 2 || feat_header[0] != "features") {
    throw model_format_error("missing features block",
                             model_format_error::kind::corrupt);
  }
  std::size_t count = 0;
  try {
    count = std::stoul(feat_header[1]);
  } catch (const std::exception&) {
    throw model_format_error("malformed feature count",
                             model_format_error::kind::corrupt);
  }
  for (std::size_t k = 0; k < count; ++k) {
    auto row = next_fields(in, "feature row");
    if (row.size() != tag_count + 1) {
      throw model_format_error("malformed feature row",
                               model_format_error::kind::corrupt);
    }
    std::uint32_t id = model.features.intern(row[0]);
    if (id != model.emission.size()) {
      throw model_format_error("duplicate feature in model file",
                               model_format_error::kind::corrupt);
    }
    std::array<double, tag_count> weights{};
    for (std::size_t t = 0; t < tag_count; ++t) {
      try {
        weights[t] = parse_double(row[t + 1]);
      } catch (const error&) {
        throw model_format_error("malformed weight",
                                 model_format_error::kind::corrupt);
      }
    }
    model.emission.push_back(weights);
  }
  return model;
}

void save_model(const tagger_model& model, const std::filesystem::path& path) {
  write_file(path, serialize_model(model));
}

tagger_model load_model(const std::filesystem::path& path) {
  return deserialize_model(read_file(path));
}

tagged_sentence tag_tokens(const tagger_model& model,
                    std::vector<std::string> tokens, const gazetteer& g) {
  if (tokens.empty()) throw error("tag: empty token list");
  std::vector<std::vector<std::string>> features(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    features[i] = extract_features(tokens, i, g);
  }
  auto decoded = viterbi_decode(model.score_positions(features),
                                model.transition);
  tagged_sentence out;
  out.tokens = std::move(tokens);
  out.tags = std::move(decoded.tags);
  return out;
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return c >= '0' && c <= '9';
  });
}

bool digit_slash_digit(std::string_view s) {
  std::size_t slash = s.find('/');
  if (slash == std::string_view::npos) return false;
  return all_digits(s.substr(0, slash)) && all_digits(s.substr(slash + 1));
}

}  // namespace

tagged_sentence rule_baseline(std::vector<std::string> tokens,
                              const gazetteer& g) {
  if (tokens.empty()) throw error("rule_baseline: empty token list");
  std::vector<tag> tags(tokens.size(), tag::outside);
  std::size_t i = 0;
  while (i < tokens.size()) {
    std::size_t street = g.match_length(name_kind::street, tokens, i, true);
    std::size_t muni =
        g.match_length(name_kind::municipality, tokens, i, true);
    if (muni > 0 && muni >= street) {
      tags[i] = tag::b_municipality;
      for (std::size_t k = 1; k < muni; ++k) tags[i + k] = tag::i_municipality;
      i += muni;
      continue;
    }
    if (street > 0) {
      tags[i] = tag::b_street;
      for (std::size_t k = 1; k < street; ++k) tags[i + k] = tag::i_street;
      i += street;
      continue;
    }
    const std::string& token = tokens[i];
    if (all_digits(token) && token.size() == 5) {
      tags[i] = tag::b_postcode;
      ++i;
      continue;
    }
    if (all_digits(token) && token.size() == 3 && i + 1 < tokens.size() &&
        all_digits(tokens[i + 1]) && tokens[i + 1].size() == 2) {
      tags[i] = tag::b_postcode;
      tags[i + 1] = tag::i_postcode;
      i += 2;
      continue;
    }
    if (all_digits(token) || digit_slash_digit(token)) {
      tags[i] = tag::b_housenumber;
    }
    ++i;
  }
  tagged_sentence out;
  out.tokens = std::move(tokens);
  out.tags = std::move(tags);
  return out;
}

}  // namespace addrtag
