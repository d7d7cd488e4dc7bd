#include "ordlines/predicates.hpp"

#include <array>

#include "ordlines/error.hpp"

namespace ordlines {

Scalar determinant3(const Scalar& a00, const Scalar& a01, const Scalar& a02,
                    const Scalar& a10, const Scalar& a11, const Scalar& a12,
                    const Scalar& a20, const Scalar& a21, const Scalar& a22) {
  return a00 * (a11 * a22 - a12 * a21) - a01 * (a10 * a22 - a12 * a20) +
         a02 * (a10 * a21 - a11 * a20);
}

bool collinear(const Point& p, const Point& q, const Point& r) {
  const std::array<const Point*, 3> pts{&p, &q, &r};
  require_compatible(pts);
  switch (p.kind()) {
    case PointKind::affine2: {
      Scalar d = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]);
      return d.is_zero();
    }
    case PointKind::affine3: {
      // (q - p) x (r - p) == 0
      std::array<Scalar, 3> u{q[0] - p[0], q[1] - p[1], q[2] - p[2]};
      std::array<Scalar, 3> v{r[0] - p[0], r[1] - p[1], r[2] - p[2]};
      return (u[1] * v[2] - u[2] * v[1]).is_zero() && (u[2] * v[0] - u[0] * v[2]).is_zero() &&
             (u[0] * v[1] - u[1] * v[0]).is_zero();
    }
    case PointKind::projective2:
      return determinant3(p[0], p[1], p[2], q[0], q[1], q[2], r[0], r[1], r[2]).is_zero();
  }
  return false;
}

bool coplanar(const Point& p, const Point& q, const Point& r, const Point& s) {
  const std::array<const Point*, 4> pts{&p, &q, &r, &s};
  require_compatible(pts);
  if (p.kind() != PointKind::affine3) throw UsageError("coplanar needs Affine3 points");
  return determinant3(q[0] - p[0], q[1] - p[1], q[2] - p[2],  //
                      r[0] - p[0], r[1] - p[1], r[2] - p[2],  //
                      s[0] - p[0], s[1] - p[1], s[2] - p[2])
      .is_zero();
}

}  // namespace ordlines
