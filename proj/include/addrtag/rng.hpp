// Copyright 2026 The addrtag Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace addrtag {

// Deterministic random source. Built on std::mt19937_64 (whose output is
// pinned by the standard) with hand-rolled draws, so identical seeds give
// identical streams on every platform and standard library.
class rng {
 public:
  explicit rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, n); rejection-sampled, so unbiased.
  std::size_t below(std::size_t n) {
    if (n == 0) throw std::invalid_argument("rng::below(0)");
    std::uint64_t bound = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= bound);
    return static_cast<std::size_t>(v % n);
  }

  // Uniform integer in [lo, hi], inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::size_t>(hi - lo + 1)));
  }

  // True with probability p.
  bool chance(double p) { return uniform01() < p; }

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  template <typename T>
  const T& pick(const std::vector<T>& items) {
    if (items.empty()) throw std::invalid_argument("rng::pick on empty set");
    return items[below(items.size())];
  }

  // Fisher-Yates with our own draws (std::shuffle is not reproducible
  // across standard libraries).
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

  // Derived stream for sharded work: shard k of a generator seeded with s
  // draws from seed derive(s, k).
  rng fork(std::uint64_t stream) const { return rng(derive(seed_, stream)); }

  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
    return seed ^ splitmix64(stream);
  }

 private:
  static std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
  }

  std::mt19937_64 engine_;
  std::uint64_t seed_;
};

}  // namespace addrtag
