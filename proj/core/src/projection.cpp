#include "ordlines/projection.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "ordlines/error.hpp"
#include "ordlines/incidence.hpp"

namespace ordlines {

ProjectionImage project_from(const PointSet& set, std::size_t center) {
  if (set.kind() != PointKind::affine3 || set.field() != Field::rational) {
    throw UsageError("projection needs a rational Affine3 set");
  }
  if (set.size() < 2) throw UsageError("projection needs at least two points");
  if (center >= set.size()) {
    throw UsageError("center index " + std::to_string(center) + " out of range for " +
                     std::to_string(set.size()) + " points");
  }

  const Point& c = set[center];
  std::unordered_map<Point, std::size_t, PointHash> slot;
  ProjectionImage image{center, {}, set};
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i == center) continue;
    Point dir = projective(set[i][0] - c[0], set[i][1] - c[1], set[i][2] - c[2]);
    auto [it, inserted] = slot.emplace(dir, image.groups.size());
    if (inserted) image.groups.push_back(ImageGroup{std::move(dir), {}});
    image.groups[it->second].sources.push_back(i);
  }
  return image;
}

std::size_t ImagePoints::unique_count() const {
  return static_cast<std::size_t>(std::count(unique_preimage.begin(), unique_preimage.end(), true));
}

ImagePoints image_point_set(const ProjectionImage& image) {
  std::vector<Point> pts;
  std::vector<bool> unique;
  pts.reserve(image.groups.size());
  for (const auto& g : image.groups) {
    pts.push_back(g.image);
    unique.push_back(g.sources.size() == 1);
  }
  return ImagePoints{PointSet(std::move(pts), "image"), std::move(unique)};
}

KellyTraceReport kelly_trace(const PointSet& set, std::size_t center) {
  ProjectionImage image = project_from(set, center);
  ImagePoints q = image_point_set(image);

  KellyTraceReport report;
  report.center = center;
  report.q1_size = q.points.size();
  report.q2_size = q.unique_count();
  if (q.points.size() < 2) return report;

  auto image_lines = spanned_lines(q.points);
  report.q1_lines = image_lines.size();

  std::unordered_set<CanonLine3, CanonLine3Hash> seen;
  for (const auto& line : image_lines) {
    bool has_unique = std::any_of(line.members.begin(), line.members.end(),
                                  [&](std::size_t m) { return q.unique_preimage[m]; });
    if (has_unique) continue;
    ++report.l1_size;

    // The plane spanned by the center and this image line meets the set in
    // exactly the center plus the preimages of the line's image points.
    std::vector<std::size_t> plane_idx{center};
    for (std::size_t m : line.members) {
      const auto& src = image.groups[m].sources;
      plane_idx.insert(plane_idx.end(), src.begin(), src.end());
    }
    PointSet plane_set = set.subset(plane_idx);

    KellyPlane plane{std::get<CanonLine2>(line.line), plane_set.size(), 0};
    for (const auto& sub : spanned_lines(plane_set)) {
      // Local index 0 is the center.
      if (sub.members.size() != 2 || sub.members[0] == 0) continue;
      const auto& l = std::get<CanonLine3>(sub.line);
      std::size_t on_line = static_cast<std::size_t>(std::count_if(
          set.begin(), set.end(), [&](const Point& p) { return incident(l, p); }));
      if (on_line != 2) {
        throw InvariantViolation("in-plane ordinary line " + l.to_string() + " holds " +
                                 std::to_string(on_line) + " points of the full set");
      }
      if (incident(l, set[center])) {
        throw InvariantViolation("found line " + l.to_string() + " passes through the center");
      }
      if (!seen.insert(l).second) {
        throw InvariantViolation("ordinary line " + l.to_string() + " found in two planes");
      }
      report.found_ordinary.push_back(l);
      ++plane.ordinary_found;
    }
    if (plane.ordinary_found == 0) {
      throw InvariantViolation("no ordinary line avoiding the center in the plane over " +
                               plane.image_line.to_string());
    }
    report.planes.push_back(std::move(plane));
  }
  return report;
}

}  // namespace ordlines
