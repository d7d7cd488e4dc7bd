#pragma once

#include <cstddef>
#include <vector>

#include "ordlines/canonical.hpp"
#include "ordlines/point_set.hpp"

namespace ordlines {

struct ImageGroup {
  Point image;                       ///< Projective2 direction from the center
  std::vector<std::size_t> sources;  ///< ascending indices into the source set
};

/// Radial projection of a 3D set from one of its points. Each other point maps
/// to the direction of its line to the center, which is exact and needs no
/// choice of image plane. Groups are ordered by their smallest source index.
struct ProjectionImage {
  std::size_t center = 0;
  std::vector<ImageGroup> groups;
  PointSet source;
};

/// Throws UsageError unless the set is rational Affine3 with >= 2 points and
/// `center` is a valid index.
ProjectionImage project_from(const PointSet& set, std::size_t center);

struct ImagePoints {
  PointSet points;                   ///< one Projective2 point per group
  std::vector<bool> unique_preimage; ///< true for groups of size 1
  std::size_t unique_count() const;
};

ImagePoints image_point_set(const ProjectionImage& image);

/// One plane through the center examined by kelly_trace.
struct KellyPlane {
  CanonLine2 image_line;            ///< image line with no unique-preimage points
  std::size_t plane_points = 0;     ///< points of the set in the plane (center included)
  std::size_t ordinary_found = 0;   ///< ordinary lines of the set in the plane, avoiding the center
};

struct KellyTraceReport {
  std::size_t center = 0;
  std::size_t q1_size = 0;
  std::size_t q2_size = 0;
  std::size_t q1_lines = 0;  ///< lines spanned by the image set
  std::size_t l1_size = 0;   ///< image lines with >= 2 image points and no unique-preimage point
  std::vector<KellyPlane> planes;
  std::vector<CanonLine3> found_ordinary;  ///< every ordinary line found, all distinct
};

/// Projects from `center`, keeps the image lines free of unique-preimage
/// points, and searches each plane they span with the center for ordinary
/// lines avoiding the center. Such a line must exist in every plane; failure to
/// find one, or any found line that is not ordinary, distinct, and
/// center-avoiding, throws InvariantViolation.
KellyTraceReport kelly_trace(const PointSet& set, std::size_t center);

}  // namespace ordlines
