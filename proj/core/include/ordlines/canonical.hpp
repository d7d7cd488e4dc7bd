#pragma once

#include <array>
#include <compare>
#include <span>
#include <cstddef>
#include <string>
#include <variant>

#include "ordlines/point.hpp"

namespace ordlines {

/// Canonical homogeneous line a*x + b*y + c*w = 0 in the plane.
///
/// Over Q the coefficients are coprime integers with the first nonzero one
/// positive. Over Q(w) the first nonzero coefficient is 1. Lines remember
/// whether they were spanned by affine or projective points; incidence with
/// the other kind is a usage error.
class CanonLine2 {
 public:
  CanonLine2(PointKind kind, Field field, std::array<Scalar, 3> coeffs)
      : kind_(kind), field_(field), coeffs_(std::move(coeffs)) {}

  PointKind kind() const noexcept { return kind_; }
  Field field() const noexcept { return field_; }
  const std::array<Scalar, 3>& coeffs() const noexcept { return coeffs_; }

  std::string to_string() const;
  std::size_t hash() const;

  friend bool operator==(const CanonLine2&, const CanonLine2&) = default;

 private:
  PointKind kind_;
  Field field_;
  std::array<Scalar, 3> coeffs_;
};

/// Canonical Plücker coordinates (p01, p02, p03, p12, p13, p23) of a line in
/// space, computed from homogeneous points (1, x, y, z). Primitive integers,
/// first nonzero entry positive. Two spanning points are cached for incidence
/// tests; they take no part in equality.
class CanonLine3 {
 public:
  CanonLine3(std::array<Integer, 6> plucker, Point a, Point b)
      : plucker_(std::move(plucker)), a_(std::move(a)), b_(std::move(b)) {}

  const std::array<Integer, 6>& plucker() const noexcept { return plucker_; }
  const Point& first_point() const noexcept { return a_; }
  const Point& second_point() const noexcept { return b_; }

  /// p01*p23 - p02*p13 + p03*p12; zero for every genuine line.
  Integer quadric() const;

  std::string to_string() const;
  std::size_t hash() const;

  friend bool operator==(const CanonLine3& lhs, const CanonLine3& rhs) {
    return lhs.plucker_ == rhs.plucker_;
  }
  friend std::strong_ordering operator<=>(const CanonLine3& lhs, const CanonLine3& rhs);

 private:
  std::array<Integer, 6> plucker_;
  Point a_;
  Point b_;
};

/// Canonical plane a*x + b*y + c*z + d = 0: primitive integers, first nonzero positive.
class CanonPlane {
 public:
  explicit CanonPlane(std::array<Integer, 4> coeffs) : coeffs_(std::move(coeffs)) {}

  const std::array<Integer, 4>& coeffs() const noexcept { return coeffs_; }

  std::string to_string() const;
  std::size_t hash() const;

  friend bool operator==(const CanonPlane&, const CanonPlane&) = default;
  friend std::strong_ordering operator<=>(const CanonPlane& lhs, const CanonPlane& rhs);

 private:
  std::array<Integer, 4> coeffs_;
};

using CanonLine = std::variant<CanonLine2, CanonLine3>;

std::string to_string(const CanonLine& line);

/// Throws DegenerateInputError when p == q, UsageError on incompatible points.
CanonLine canon_line(const Point& p, const Point& q);
CanonLine2 canon_line2(const Point& p, const Point& q);
CanonLine3 canon_line3(const Point& p, const Point& q);

/// Throws DegenerateInputError on a collinear triple, UsageError unless Affine3.
CanonPlane canon_plane(const Point& p, const Point& q, const Point& r);

bool incident(const CanonLine2& line, const Point& p);
bool incident(const CanonLine3& line, const Point& p);
bool incident(const CanonPlane& plane, const Point& p);
bool incident(const CanonLine& line, const Point& p);

/// Plücker reciprocal product; zero iff the two lines meet or are parallel.
Integer reciprocal_product(const CanonLine3& l, const CanonLine3& m);

/// True iff the lines are not contained in a common plane.
bool skew(const CanonLine3& l, const CanonLine3& m);

/// Divides by the content and flips sign so the first nonzero entry is positive.
/// Throws DegenerateInputError on the zero vector.
void make_primitive(std::span<Integer> v);

struct CanonLine2Hash {
  std::size_t operator()(const CanonLine2& l) const { return l.hash(); }
};
struct CanonLine3Hash {
  std::size_t operator()(const CanonLine3& l) const { return l.hash(); }
};
struct CanonPlaneHash {
  std::size_t operator()(const CanonPlane& p) const { return p.hash(); }
};

}  // namespace ordlines
