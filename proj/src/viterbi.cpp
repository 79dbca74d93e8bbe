// Copyright 2026 The addrtag Authors
// SPDX-License-Identifier: Apache-2.0

#include "addrtag/viterbi.hpp"

#include <cmath>
#include <limits>

#include "addrtag/error.hpp"

namespace addrtag {

// Suffix-score dynamic program plus forward reconstruction. best[i][t] is
// the best score of a valid suffix starting at position i with tag t; the
// first successor attaining each maximum is recorded, so following those
// links from the smallest optimal start tag yields the lexicographically
// smallest optimal sequence without any floating-point equality tests.
decode_result viterbi_decode(const emission_scores& emissions,
                             const transition_scores& transitions) {
  const std::size_t n = emissions.size();
  if (n == 0) throw error("viterbi_decode: empty input");
  for (const auto& row : emissions) {
    for (double v : row) {
      if (!std::isfinite(v)) throw error("viterbi_decode: non-finite score");
    }
  }
  for (const auto& row : transitions) {
    for (double v : row) {
      if (!std::isfinite(v)) throw error("viterbi_decode: non-finite score");
    }
  }

  constexpr double neg_inf = -std::numeric_limits<double>::infinity();
  std::vector<std::array<double, tag_count>> best(n);
  std::vector<std::array<std::uint8_t, tag_count>> next(n);

  for (std::size_t t = 0; t < tag_count; ++t) {
    best[n - 1][t] = emissions[n - 1][t];
    next[n - 1][t] = 0;
  }
  for (std::size_t i = n - 1; i-- > 0;) {
    for (std::size_t t = 0; t < tag_count; ++t) {
      double top = neg_inf;
      std::uint8_t arg = 0;
      for (std::size_t u = 0; u < tag_count; ++u) {
        if (!transition_allowed(tag_at(t), tag_at(u))) continue;
        double candidate = transitions[t][u] + best[i + 1][u];
        if (candidate > top) {
          top = candidate;
          arg = static_cast<std::uint8_t>(u);
        }
      }
      best[i][t] = emissions[i][t] + top;
      next[i][t] = arg;
    }
  }

  double top = neg_inf;
  std::size_t start = 0;
  for (std::size_t t = 0; t < tag_count; ++t) {
    if (!start_allowed(tag_at(t))) continue;
    if (best[0][t] > top) {
      top = best[0][t];
      start = t;
    }
  }

  decode_result result;
  result.score = top;
  result.tags.reserve(n);
  std::size_t current = start;
  result.tags.push_back(tag_at(current));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    current = next[i][current];
    result.tags.push_back(tag_at(current));
  }
  return result;
}

}  // namespace addrtag
