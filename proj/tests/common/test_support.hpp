// Copyright 2026 The addrtag Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <unistd.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "addrtag/rng.hpp"
#include "addrtag/sentence.hpp"
#include "addrtag/viterbi.hpp"

namespace test_support {

inline std::filesystem::path data_dir() {
  return std::filesystem::path(ADDRTAG_DATA_DIR);
}

// Fresh scratch directory, removed on destruction.
class temp_dir {
 public:
  temp_dir() {
    auto base = std::filesystem::temp_directory_path();
    static std::atomic<unsigned> counter{0};
    path_ = base / ("addrtag-test-" + std::to_string(::getpid()) + "-" +
                    std::to_string(counter.fetch_add(1)));
    std::filesystem::create_directories(path_);
  }
  ~temp_dir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path file(const std::string& name) const {
    return path_ / name;
  }

 private:
  std::filesystem::path path_;
};

inline void write_lines(const std::filesystem::path& path,
                        const std::vector<std::string>& lines) {
  std::ofstream out(path, std::ios::binary);
  for (const auto& line : lines) out << line << '\n';
}

// Random BIO-valid tag sequence: each position draws uniformly from the
// tags reachable from the previous one.
inline std::vector<addrtag::tag> random_valid_tags(addrtag::rng& r,
                                                   std::size_t length) {
  std::vector<addrtag::tag> tags;
  tags.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<addrtag::tag> allowed;
    for (addrtag::tag t : addrtag::all_tags()) {
      bool ok = i == 0 ? addrtag::start_allowed(t)
                       : addrtag::transition_allowed(tags.back(), t);
      if (ok) allowed.push_back(t);
    }
    tags.push_back(allowed[r.below(allowed.size())]);
  }
  return tags;
}

inline addrtag::tagged_sentence random_valid_sentence(addrtag::rng& r,
                                                      std::size_t max_len = 8) {
  static const std::vector<std::string> vocabulary = {
      "Košice", "hlavná", "ulica", "834", "841",  "04",   "ehm",
      "Ďalšie", "dom",    "č",     "x7",  "Nová", "Ves",  "12/3",
  };
  std::size_t length = 1 + r.below(max_len);
  addrtag::tagged_sentence s;
  s.tags = random_valid_tags(r, length);
  for (std::size_t i = 0; i < length; ++i) {
    s.tokens.push_back(vocabulary[r.below(vocabulary.size())]);
  }
  return s;
}

inline addrtag::corpus random_valid_corpus(addrtag::rng& r,
                                           std::size_t sentences,
                                           const std::string& name = "random") {
  addrtag::corpus c;
  c.name = name;
  for (std::size_t i = 0; i < sentences; ++i) {
    c.sentences.push_back(random_valid_sentence(r));
  }
  return c;
}

// Exhaustive reference decoder: walks every BIO-valid sequence and keeps
// the best score, breaking ties toward the lexicographically smaller
// sequence in tag order. Exponential; lengths above ~6 are off the table.
struct exhaustive_best {
  std::vector<addrtag::tag> tags;
  double score;
};

inline void exhaustive_search(const addrtag::emission_scores& emissions,
                              const addrtag::transition_scores& transitions,
                              std::vector<addrtag::tag>& prefix, double score,
                              exhaustive_best& best) {
  std::size_t i = prefix.size();
  if (i == emissions.size()) {
    if (score > best.score ||
        (score == best.score && !best.tags.empty() && prefix < best.tags)) {
      best.tags = prefix;
      best.score = score;
    }
    return;
  }
  for (addrtag::tag t : addrtag::all_tags()) {
    bool ok = i == 0 ? addrtag::start_allowed(t)
                     : addrtag::transition_allowed(prefix.back(), t);
    if (!ok) continue;
    double gain = emissions[i][addrtag::index_of(t)];
    if (i > 0) {
      gain += transitions[addrtag::index_of(prefix.back())]
                         [addrtag::index_of(t)];
    }
    prefix.push_back(t);
    exhaustive_search(emissions, transitions, prefix, score + gain, best);
    prefix.pop_back();
  }
}

inline exhaustive_best exhaustive_decode(
    const addrtag::emission_scores& emissions,
    const addrtag::transition_scores& transitions) {
  exhaustive_best best;
  best.score = -1e300;
  std::vector<addrtag::tag> prefix;
  exhaustive_search(emissions, transitions, prefix, 0.0, best);
  return best;
}

}  // namespace test_support
