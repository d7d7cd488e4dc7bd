#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "ordlines/canonical.hpp"
#include "ordlines/point_set.hpp"

namespace ordlines {

/// Multiplicity histogram of the lines spanned by a set.
struct SpanSummary {
  std::size_t n = 0;
  std::map<std::size_t, std::size_t> t;  ///< t[k] = number of spanned lines with exactly k points
  std::size_t num_lines = 0;
  std::size_t ordinary = 0;
  std::size_t max_collinear = 0;

  std::size_t lines_with(std::size_t k) const {
    auto it = t.find(k);
    return it == t.end() ? 0 : it->second;
  }

  friend bool operator==(const SpanSummary&, const SpanSummary&) = default;
};

struct SpannedLine {
  CanonLine line;
  std::vector<std::size_t> members;  ///< ascending point indices
};

struct SpannedPlane {
  CanonPlane plane;
  std::vector<std::size_t> members;
};

struct PlaneSummary {
  std::map<CanonPlane, std::size_t> plane_counts;
  std::size_t max_coplanar = 0;

  friend bool operator==(const PlaneSummary&, const PlaneSummary&) = default;
};

// All of the following throw UsageError for sets with fewer than two points.

SpanSummary span_summary(const PointSet& set);

/// Every spanned line with its members, in canonical key order.
std::vector<SpannedLine> spanned_lines(const PointSet& set);

/// Lines with exactly two points, in canonical key order.
std::vector<CanonLine> ordinary_lines(const PointSet& set);

std::size_t max_collinear(const PointSet& set);

/// degrees[i] = number of spanned lines through point i.
std::vector<std::size_t> point_degrees(const PointSet& set);

/// Rational Affine3 sets only. Throws DegenerateInputError when all points are
/// collinear (every plane through the line would hold the whole set).
PlaneSummary plane_summary(const PointSet& set);
std::vector<SpannedPlane> spanned_planes(const PointSet& set);

/// Builds a summary from a list of per-line point counts.
SpanSummary summarize_line_sizes(std::size_t n, const std::vector<std::size_t>& sizes);

}  // namespace ordlines
