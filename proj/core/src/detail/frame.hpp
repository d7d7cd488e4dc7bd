#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "ordlines/point_set.hpp"
#include "ordlines/scalar.hpp"

namespace ordlines::detail {

/// Hash key of a spanned line or plane. Its entries are exactly the canonical
/// coefficients (over Q) or the flattened numerator/denominator pairs of the
/// leading-one coefficients (over Q(w)).
using Key = std::vector<Integer>;

struct KeyHash {
  std::size_t operator()(const Key& k) const;
};

bool key_less(const Key& a, const Key& b);

/// Per-point integer homogeneous coordinates of a set, precomputed once so
/// that every pair and triple key is pure integer arithmetic.
class Frame {
 public:
  explicit Frame(const PointSet& set);
  explicit Frame(std::span<const Point> points);

  std::size_t size() const noexcept { return size_; }
  PointKind kind() const noexcept { return kind_; }
  Field field() const noexcept { return field_; }

  /// Key of the line through points i and j (i != j, points distinct).
  Key line_key(std::size_t i, std::size_t j) const;

  /// Key of the plane through i, j, k (Affine3 only); empty when collinear.
  Key plane_key(std::size_t i, std::size_t j, std::size_t k) const;

 private:
  std::size_t size_ = 0;
  PointKind kind_;
  Field field_;
  // Rational sets: affine2 -> (X, Y, W); affine3 -> (W, X, Y, Z); projective2 -> (x, y, z).
  std::vector<std::array<Integer, 4>> ints_;
  // Eisenstein sets: homogeneous scalar coordinates.
  std::vector<std::vector<Scalar>> scalars_;
};

struct Group {
  Key key;
  std::vector<std::size_t> members;  // sorted ascending
};

/// Groups all pairs of the frame by line key; result sorted by key.
std::vector<Group> group_lines(const Frame& frame);

/// Groups (spanned line, off-line point) pairs by plane key; result sorted by key.
/// Requires an Affine3 frame whose points are not all collinear.
std::vector<Group> group_planes(const Frame& frame, const std::vector<Group>& lines);

/// Number of ordinary lines without materializing groups beyond the count.
std::size_t count_ordinary(const Frame& frame);

}  // namespace ordlines::detail
