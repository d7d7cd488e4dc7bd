#pragma once

#include <cstddef>
#include <cstdint>

#include "ordlines/point_set.hpp"

namespace ordlines {

/// Regeneration budget of the seeded constrained generators.
inline constexpr int kGenerationRetries = 100;

/// Default numerator/denominator bound for random rational coordinates.
inline constexpr std::int64_t kDefaultCoordinateBound = 20;

/// (t, 0, 0) and (0, t, 1) for t = 1..m: m points on each of two skew lines.
/// Throws UsageError for m < 2.
PointSet gen_two_skew(std::size_t m);

/// n - k random rational points in z = 0 (the origin among them) plus
/// (0, 0, t) for t = 1..k. Regenerates until max_coplanar == n - k and the
/// only line with three or more points through an off-plane point is the z-axis.
/// Throws UsageError unless n - k >= 4 and k >= 1; GenerationError when the
/// constraints cannot be met within kGenerationRetries attempts.
PointSet gen_near_coplanar(std::size_t n, std::size_t k, std::uint64_t seed,
                           std::int64_t bound = kDefaultCoordinateBound);

/// Ordinary-line count of a gen_near_coplanar set given the ordinary count of
/// its planar part: k(n-k) + ord_planar - k for k >= 2. For k = 1 the z-axis
/// holds only two points and is itself ordinary, giving (n-1) + ord_planar.
std::size_t near_coplanar_ordinary(std::size_t n, std::size_t k, std::size_t ord_planar);

/// floor(alpha*n) random points in z = 0 and the rest at random off the plane,
/// regenerated until max_coplanar == floor(alpha*n).
/// Throws UsageError unless 3 <= floor(alpha*n) <= n.
PointSet gen_coplanar_heavy(std::size_t n, const Rational& alpha, std::uint64_t seed,
                            std::int64_t bound = kDefaultCoordinateBound);

/// n distinct random rational points in dimension 2 or 3.
PointSet gen_random(std::size_t n, int dim, std::int64_t bound, std::uint64_t seed);

/// The nine inflection points of a Hesse pencil cubic over Q(w): twelve
/// three-point lines and no ordinary line.
PointSet gen_hesse();

/// Integer grid {1..a} x {1..b}.
PointSet gen_grid2d(std::size_t a, std::size_t b);

}  // namespace ordlines
