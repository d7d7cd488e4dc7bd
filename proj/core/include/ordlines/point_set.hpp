#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ordlines/point.hpp"

namespace ordlines {

/// A nonempty finite set of pairwise distinct points of one kind over one field.
class PointSet {
 public:
  /// Throws UsageError on an empty or mixed list and DuplicatePointError on repeats.
  explicit PointSet(std::vector<Point> points, std::string label = {});

  std::size_t size() const noexcept { return points_.size(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  std::span<const Point> points() const noexcept { return points_; }
  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

  PointKind kind() const noexcept { return points_.front().kind(); }
  Field field() const noexcept { return points_.front().field(); }
  const std::string& label() const noexcept { return label_; }

  /// Subset in the order of `indices`.
  PointSet subset(std::span<const std::size_t> indices, std::string label = {}) const;

  friend bool operator==(const PointSet& lhs, const PointSet& rhs) {
    return lhs.points_ == rhs.points_;
  }

 private:
  std::vector<Point> points_;
  std::string label_;
};

/// True when every point of the set lies on one line (always for n <= 2).
bool all_collinear(const PointSet& set);

}  // namespace ordlines
