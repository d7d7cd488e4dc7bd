#pragma once

#include <cstdint>
#include <random>

#include "ordlines/scalar.hpp"

namespace ordlines {

/// Seeded generator with platform-independent draws: the raw engine output is
/// specified by the standard, and bounded draws use rejection sampling rather
/// than std::uniform_int_distribution (whose algorithm is library-specific).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  /// Uniform index in [0, n).
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(n) - 1)); }

  /// num/den with num in [-bound, bound] and den in [1, bound].
  Rational rational(std::int64_t bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace ordlines
