#include "ordlines/point_set.hpp"

#include <unordered_map>

#include "ordlines/error.hpp"
#include "ordlines/predicates.hpp"

namespace ordlines {

PointSet::PointSet(std::vector<Point> points, std::string label)
    : points_(std::move(points)), label_(std::move(label)) {
  if (points_.empty()) throw UsageError("point set must be nonempty");
  std::vector<const Point*> ptrs;
  ptrs.reserve(points_.size());
  for (const auto& p : points_) ptrs.push_back(&p);
  require_compatible(ptrs);

  std::unordered_map<Point, std::size_t, PointHash> seen;
  seen.reserve(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    auto [it, inserted] = seen.emplace(points_[i], i);
    if (!inserted) throw DuplicatePointError(it->second, i);
  }
}

PointSet PointSet::subset(std::span<const std::size_t> indices, std::string label) const {
  std::vector<Point> pts;
  pts.reserve(indices.size());
  for (std::size_t i : indices) {
    if (i >= points_.size()) throw UsageError("subset index out of range");
    pts.push_back(points_[i]);
  }
  return PointSet(std::move(pts), std::move(label));
}

bool all_collinear(const PointSet& set) {
  if (set.size() <= 2) return true;
  for (std::size_t k = 2; k < set.size(); ++k) {
    if (!collinear(set[0], set[1], set[k])) return false;
  }
  return true;
}

}  // namespace ordlines
