#include "ordlines/random.hpp"

#include "ordlines/error.hpp"

namespace ordlines {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw UsageError("empty range in Rng::uniform");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == UINT64_MAX) return static_cast<std::int64_t>(next());
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % range);
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % range);
}

Rational Rng::rational(std::int64_t bound) {
  if (bound < 1) throw UsageError("rational bound must be positive");
  std::int64_t num = uniform(-bound, bound);
  std::int64_t den = uniform(1, bound);
  Rational r(static_cast<long>(num), static_cast<unsigned long>(den));
  r.canonicalize();
  return r;
}

}  // namespace ordlines
