#pragma once

#include "ordlines/point.hpp"

namespace ordlines {

/// True iff the three points lie on a common line. Points must share kind and
/// field (UsageError otherwise). Coincident points count as collinear.
bool collinear(const Point& p, const Point& q, const Point& r);

/// True iff four Affine3 points lie on a common plane.
bool coplanar(const Point& p, const Point& q, const Point& r, const Point& s);

/// 3x3 determinant over the scalar field.
Scalar determinant3(const Scalar& a00, const Scalar& a01, const Scalar& a02,
                    const Scalar& a10, const Scalar& a11, const Scalar& a12,
                    const Scalar& a20, const Scalar& a21, const Scalar& a22);

}  // namespace ordlines
