#include "ordlines/incidence.hpp"

#include <algorithm>

#include "detail/frame.hpp"
#include "ordlines/error.hpp"

namespace ordlines {

namespace {

void require_pairs(const PointSet& set) {
  if (set.size() < 2) throw UsageError("need at least two points, got " + std::to_string(set.size()));
}

void require_planes(const PointSet& set) {
  if (set.kind() != PointKind::affine3 || set.field() != Field::rational) {
    throw UsageError("plane enumeration needs a rational Affine3 set");
  }
  if (set.size() < 3) throw UsageError("plane enumeration needs at least three points");
  if (all_collinear(set)) {
    throw DegenerateInputError("all points are collinear; spanned planes are undefined");
  }
}

}  // namespace

SpanSummary summarize_line_sizes(std::size_t n, const std::vector<std::size_t>& sizes) {
  SpanSummary s;
  s.n = n;
  for (std::size_t k : sizes) {
    ++s.t[k];
    s.max_collinear = std::max(s.max_collinear, k);
  }
  s.num_lines = sizes.size();
  s.ordinary = s.lines_with(2);
  return s;
}

SpanSummary span_summary(const PointSet& set) {
  require_pairs(set);
  auto groups = detail::group_lines(detail::Frame(set));
  std::vector<std::size_t> sizes;
  sizes.reserve(groups.size());
  for (const auto& g : groups) sizes.push_back(g.members.size());
  return summarize_line_sizes(set.size(), sizes);
}

std::vector<SpannedLine> spanned_lines(const PointSet& set) {
  require_pairs(set);
  auto groups = detail::group_lines(detail::Frame(set));
  std::vector<SpannedLine> out;
  out.reserve(groups.size());
  for (auto& g : groups) {
    out.push_back(SpannedLine{canon_line(set[g.members[0]], set[g.members[1]]), std::move(g.members)});
  }
  return out;
}

std::vector<CanonLine> ordinary_lines(const PointSet& set) {
  require_pairs(set);
  auto groups = detail::group_lines(detail::Frame(set));
  std::vector<CanonLine> out;
  for (const auto& g : groups) {
    if (g.members.size() == 2) out.push_back(canon_line(set[g.members[0]], set[g.members[1]]));
  }
  return out;
}

std::size_t max_collinear(const PointSet& set) { return span_summary(set).max_collinear; }

std::vector<std::size_t> point_degrees(const PointSet& set) {
  require_pairs(set);
  std::vector<std::size_t> degrees(set.size(), 0);
  for (const auto& g : detail::group_lines(detail::Frame(set))) {
    for (std::size_t m : g.members) ++degrees[m];
  }
  return degrees;
}

std::vector<SpannedPlane> spanned_planes(const PointSet& set) {
  require_planes(set);
  detail::Frame frame(set);
  auto groups = detail::group_planes(frame, detail::group_lines(frame));
  std::vector<SpannedPlane> out;
  out.reserve(groups.size());
  for (auto& g : groups) {
    std::array<Integer, 4> coeffs{g.key[0], g.key[1], g.key[2], g.key[3]};
    out.push_back(SpannedPlane{CanonPlane(std::move(coeffs)), std::move(g.members)});
  }
  return out;
}

PlaneSummary plane_summary(const PointSet& set) {
  PlaneSummary s;
  for (auto& p : spanned_planes(set)) {
    s.max_coplanar = std::max(s.max_coplanar, p.members.size());
    s.plane_counts.emplace(std::move(p.plane), p.members.size());
  }
  return s;
}

}  // namespace ordlines
