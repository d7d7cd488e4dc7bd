#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ordlines/canonical.hpp"
#include "ordlines/point_set.hpp"

namespace ordlines {

struct MoveWeights {
  unsigned perturb = 4;
  unsigned snap_to_line = 2;
  unsigned snap_to_plane = 2;
  unsigned restart_point = 1;
};

/// Annealing search for 3D rational sets with few ordinary lines and at most
/// floor(alpha*n) points on any plane.
struct SearchConfig {
  std::size_t n = 20;
  Rational alpha{3, 5};
  std::size_t iterations = 10000;
  std::uint64_t seed = 1;
  std::int64_t coordinate_bound = 10;
  std::optional<PointSet> initial;
  MoveWeights weights;
  Rational initial_temperature{2};
  Rational decay{999, 1000};
  /// Proposals with a coordinate numerator or denominator wider than this are rejected.
  std::size_t max_coordinate_bits = 64;
};

struct TracePoint {
  std::size_t iteration = 0;
  std::size_t count = 0;
  friend bool operator==(const TracePoint&, const TracePoint&) = default;
};

/// Within-plane statistics of the best set, for planes with at least four points.
struct PlaneStat {
  CanonPlane plane;
  std::size_t points = 0;
  std::size_t ordinary_in_plane = 0;
  friend bool operator==(const PlaneStat&, const PlaneStat&) = default;
};

struct SearchResult {
  PointSet best;
  std::size_t best_count = 0;
  std::size_t initial_count = 0;
  Rational ratio;  ///< best_count / n^2
  std::size_t cap = 0;
  std::size_t max_coplanar = 0;
  std::size_t iterations = 0;
  std::size_t accepted_moves = 0;
  std::vector<TracePoint> trace;  ///< (0, initial) then every improvement of the best
  std::vector<PlaneStat> plane_stats;

  friend bool operator==(const SearchResult&, const SearchResult&) = default;
};

/// floor(alpha * n).
std::size_t coplanar_cap(std::size_t n, const Rational& alpha);

/// Largest number of points on one plane; n for collinear sets. Affine3 rational only.
std::size_t max_coplanar_or_n(const PointSet& set);

/// Acceptance probability of a worsening move, exp(-x) read from a fixed
/// piecewise-linear table and scaled by 2^32. Exactly zero for x >= 8.
Rational acceptance_threshold(const Rational& x);

/// Deterministic given the config. Throws UsageError for an invalid config, an
/// initial set violating the cap, or an infeasible cap (< 3).
SearchResult minimize_ordinary(const SearchConfig& config);

}  // namespace ordlines
