#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ordlines/scalar.hpp"

namespace ordlines {

enum class PointKind { affine2, affine3, projective2 };

std::string_view to_string(PointKind kind);

/// Number of stored coordinates for a kind (2, 3, or 3 homogeneous).
std::size_t coordinate_count(PointKind kind);

/// A point of the affine plane, affine space, or the projective plane over Q or Q(w).
///
/// Projective points are stored with their first nonzero coordinate scaled to 1,
/// so equality is structural. Affine points over Q(w) are allowed in the plane
/// only; 3D sets are rational.
class Point {
 public:
  /// Throws UsageError on a wrong coordinate count, an all-zero projective
  /// point, or an Eisenstein-valued Affine3 point.
  Point(PointKind kind, std::vector<Scalar> coords);

  PointKind kind() const noexcept { return kind_; }
  Field field() const noexcept { return field_; }
  std::size_t size() const noexcept { return coords_.size(); }
  std::span<const Scalar> coords() const noexcept { return coords_; }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }

  /// Homogeneous coordinates: (x, y, 1), (x, y, z, 1), or the stored triple.
  std::vector<Scalar> homogeneous() const;

  std::string to_string() const;
  std::size_t hash() const;

  friend bool operator==(const Point& lhs, const Point& rhs) {
    return lhs.kind_ == rhs.kind_ && lhs.field_ == rhs.field_ && lhs.coords_ == rhs.coords_;
  }

 private:
  PointKind kind_;
  Field field_;
  std::vector<Scalar> coords_;
};

Point affine(Scalar x, Scalar y);
Point affine(Scalar x, Scalar y, Scalar z);
Point projective(Scalar x, Scalar y, Scalar z);

struct PointHash {
  std::size_t operator()(const Point& p) const { return p.hash(); }
};

/// Throws UsageError unless all points share kind and field.
void require_compatible(std::span<const Point* const> points);

}  // namespace ordlines
