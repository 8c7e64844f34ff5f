#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>

#include "sgraph/sign.hpp"

namespace sgraph {

/// Seeded RNG with hand-rolled bounded draws. std::uniform_int_distribution is
/// implementation-defined, so corpora would not reproduce across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform draw from {0, ..., bound-1}; bound >= 1. Rejection sampling
  /// keeps the draw exactly uniform.
  int below(int bound) {
    if (bound < 1) throw std::invalid_argument("bound must be positive");
    const auto b = static_cast<std::uint64_t>(bound);
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % b;
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return static_cast<int>(v % b);
  }

  bool coin() { return (next() >> 63) != 0; }

  Sign random_sign() { return coin() ? Sign::Minus : Sign::Plus; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace sgraph
