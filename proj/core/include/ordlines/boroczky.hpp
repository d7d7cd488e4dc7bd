#pragma once

#include <cstddef>
#include <map>
#include <vector>

namespace ordlines {

/// Combinatorial model of the conic-plus-line configuration with n/2 ordinary
/// lines. Points 0..m-1 are the conic points C_j, points m..2m-1 the line
/// points D_i. The model's lines, which define the configuration, are
///   - the line at infinity {D_0, ..., D_{m-1}},
///   - for j < k the chord {C_j, C_k, D_{(j+k+m/2) mod m}},
///   - for each j the tangent {C_j, D_{(2j+m/2) mod m}}.
struct BoroczkyModel {
  std::size_t m = 0;
  std::vector<std::vector<std::size_t>> lines;
};

struct BoroczkyModelSummary {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t ordinary = 0;
  std::map<std::size_t, std::size_t> t;

  friend bool operator==(const BoroczkyModelSummary&, const BoroczkyModelSummary&) = default;
};

inline std::size_t conic_point(std::size_t j) { return j; }
inline std::size_t line_point(std::size_t m, std::size_t i) { return m + i; }

/// Throws UsageError unless m is even and m >= 4.
BoroczkyModel boroczky_lines(std::size_t m);

/// Line of the model through two distinct model points, read off the rules
/// for that pair alone.
std::vector<std::size_t> boroczky_line_through(std::size_t m, std::size_t a, std::size_t b);

/// Counts the model's lines. Before counting, checks that every pair of model
/// points lies on exactly one model line (InvariantViolation otherwise).
BoroczkyModelSummary boroczky_model(std::size_t m);

}  // namespace ordlines
