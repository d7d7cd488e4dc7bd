#include "ordlines/analysis.hpp"

#include <algorithm>
#include <unordered_set>

#include "ordlines/error.hpp"
#include "ordlines/incidence.hpp"

namespace ordlines {

namespace {

const Rational& min3(const Rational& a, const Rational& b, const Rational& c) {
  return std::min(std::min(a, b), c);
}

void require_unit_interval(const Rational& v, const char* name) {
  if (sgn(v) <= 0 || v >= 1) {
    throw UsageError(std::string(name) + " must lie strictly between 0 and 1, got " + v.get_str());
  }
}

void require_planar(const PointSet& set, const char* what) {
  if (set.kind() == PointKind::affine3) throw UsageError(std::string(what) + " needs a planar set");
}

}  // namespace

Rational gamma_prime(const Rational& beta_prime, const Rational& beta, const Rational& gamma) {
  Rational rest = 1 - beta_prime;
  Rational a = gamma * rest * rest;
  Rational b = beta * beta * rest / 2;
  return min3(gamma, a, b);
}

BoundConstants bound_constants(const Rational& alpha, const Rational& beta, const Rational& gamma) {
  require_unit_interval(alpha, "alpha");
  require_unit_interval(beta, "beta");
  require_unit_interval(gamma, "gamma");

  BoundConstants c;
  c.alpha = alpha;
  c.beta = beta;
  c.gamma = gamma;
  c.alpha0 = beta * gamma;
  c.c_alpha0 = gamma * gamma * gamma * gamma * gamma / 2;

  const Rational rest = 1 - alpha;
  const Rational rest2 = rest * rest;
  c.mu = alpha - min3(alpha, beta, gamma) * rest2 / 4;
  c.nu = 2 * c.mu - alpha + gamma * rest2;
  if (sgn(c.nu) <= 0) throw DomainError("nu = " + c.nu.get_str() + " is not positive");

  c.gamma_prime_case1 = gamma_prime(c.mu / alpha, beta, gamma);
  const Rational& g1 = c.gamma_prime_case1;
  c.d_case1 = std::min(Rational(g1 * alpha * alpha * rest / 4), Rational(g1 * alpha * alpha / 2));

  c.d_case2a = c.mu * beta * rest / 2;

  c.gamma_prime_case2b = gamma_prime(alpha / c.nu, beta, gamma);
  const Rational& g2 = c.gamma_prime_case2b;
  c.d_case2b = std::min(Rational(alpha * g2 / 4), Rational(g2 / 2));

  c.d_alpha = min3(c.d_case1, c.d_case2a, c.d_case2b);
  return c;
}

SylvesterGallaiReport verify_sylvester_gallai(const PointSet& set) {
  require_planar(set, "verify_sylvester_gallai");
  if (set.size() < 3) throw UsageError("verify_sylvester_gallai needs at least three points");
  SylvesterGallaiReport r;
  r.collinear = all_collinear(set);
  auto ordinary = ordinary_lines(set);
  r.ordinary = ordinary.size();
  if (!ordinary.empty()) r.witness = std::get<CanonLine2>(ordinary.front());
  r.holds = r.collinear || r.ordinary >= 1;
  return r;
}

SkewBoundReport verify_skew_bound(const PointSet& set, const CanonLine3& first,
                                  const CanonLine3& second) {
  if (!skew(first, second)) {
    throw UsageError("lines " + first.to_string() + " and " + second.to_string() +
                     " are coplanar, not skew");
  }
  SkewBoundReport r;
  r.n = set.size();
  for (const auto& p : set) {
    if (incident(first, p)) ++r.on_first;
    if (incident(second, p)) ++r.on_second;
  }
  r.lhs = set.size() >= 2 ? span_summary(set).ordinary : 0;
  r.rhs = static_cast<std::int64_t>(r.on_first * r.on_second) - static_cast<std::int64_t>(r.n);
  r.holds = static_cast<std::int64_t>(r.lhs) >= r.rhs;
  return r;
}

AlmostCoplanarReport verify_almost_coplanar(const PointSet& set, std::size_t k) {
  const std::size_t n = set.size();
  if (k > n) throw UsageError("k exceeds the number of points");
  AlmostCoplanarReport r;
  r.n = n;
  r.k = k;
  for (const auto& p : spanned_planes(set)) {
    r.max_coplanar = std::max(r.max_coplanar, p.members.size());
    if (p.members.size() > n - k) {
      throw UsageError("plane " + p.plane.to_string() + " holds " +
                       std::to_string(p.members.size()) + " points, more than n - k = " +
                       std::to_string(n - k));
    }
  }
  r.count = span_summary(set).ordinary;
  const long nk = static_cast<long>(n - k);
  const long kk = static_cast<long>(k);
  r.bound = Rational(2 * kk + 1, 2) * nk - Rational(kk * (kk - 1), 2);
  r.bound.canonicalize();
  r.holds = Rational(static_cast<long>(r.count)) >= r.bound;
  r.caveat =
      "the lower bound is only guaranteed for n >= n_k, and n_k is not quantified; "
      "a failing comparison at small n is a report, not a counterexample";
  return r;
}

SmallLineCounts small_line_counts(const PointSet& set) {
  require_planar(set, "small_line_counts");
  SpanSummary s = span_summary(set);
  return SmallLineCounts{s.n, s.n * s.n, s.lines_with(2) + s.lines_with(3),
                         s.lines_with(2) + s.lines_with(3) + s.lines_with(4)};
}

ConcurrentProbe concurrent_lines_probe(const PointSet& set, const Point& apex) {
  require_planar(set, "concurrent_lines_probe");
  if (apex.kind() != set.kind() || apex.field() != set.field()) {
    throw UsageError("apex must match the set's kind and field");
  }
  if (all_collinear(set)) throw UsageError("set is contained in one line");

  ConcurrentProbe r;
  std::unordered_set<CanonLine2, CanonLine2Hash> through_apex;
  for (const auto& p : set) {
    if (p != apex) through_apex.insert(canon_line2(apex, p));
  }
  r.contained_in = through_apex.size();
  for (const auto& line : ordinary_lines(set)) {
    if (!incident(line, apex)) ++r.ordinary_avoiding_apex;
  }
  r.guarantee_applies =
      set.field() == Field::rational && (r.contained_in == 3 || r.contained_in == 4);
  r.holds = !r.guarantee_applies || r.ordinary_avoiding_apex >= 1;
  return r;
}

BeckReport beck_report(const PointSet& set) {
  SpanSummary s = span_summary(set);
  BeckReport r;
  r.n = s.n;
  r.num_lines = s.num_lines;
  r.max_collinear = s.max_collinear;
  const long n = static_cast<long>(s.n);
  r.ratio_lines = Rational(static_cast<long>(s.num_lines), n * n);
  r.ratio_lines.canonicalize();
  r.ratio_collinear = Rational(static_cast<long>(s.max_collinear), n);
  r.ratio_collinear.canonicalize();
  r.beta_hypothesis = r.ratio_collinear <= kBeckBeta;
  r.gamma_reached = r.ratio_lines >= kBeckGamma;
  return r;
}

}  // namespace ordlines
