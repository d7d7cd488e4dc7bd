#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "ordlines/canonical.hpp"
#include "ordlines/point_set.hpp"

namespace ordlines {

/// Best known constants of the planar spanned-lines bound: at most beta*n
/// points on a line forces at least gamma*n^2 spanned lines.
inline const Rational kBeckBeta{2, 3};
inline const Rational kBeckGamma{1, 9};

/// Every constant of the ordinary-line lower bound in space, as exact rationals.
///
/// alpha0 and c_alpha0 belong to the few-coplanar regime; mu, nu and the three
/// case bounds to the regime where exactly alpha*n points are coplanar. Each
/// case that ends in two alternatives keeps the smaller one, and d_alpha is the
/// minimum over the cases.
struct BoundConstants {
  Rational alpha;
  Rational beta;
  Rational gamma;

  Rational alpha0;    // beta * gamma
  Rational c_alpha0;  // gamma^5 / 2
  Rational mu;        // alpha - min(alpha, beta, gamma) (1 - alpha)^2 / 4
  Rational nu;        // 2 mu - alpha + gamma (1 - alpha)^2

  Rational gamma_prime_case1;   // gamma_prime(mu / alpha)
  Rational gamma_prime_case2b;  // gamma_prime(alpha / nu)

  Rational d_case1;   // min(g' a^2 (1 - a) / 4, g' a^2 / 2)
  Rational d_case2a;  // mu beta (1 - alpha) / 2
  Rational d_case2b;  // min(alpha g' / 4, g' / 2)
  Rational d_alpha;   // min of the three cases
};

/// Spanned-lines constant for sets with at most beta_prime*n collinear points:
/// min(gamma, gamma (1 - beta')^2, beta^2 (1 - beta') / 2).
Rational gamma_prime(const Rational& beta_prime, const Rational& beta, const Rational& gamma);

/// Throws UsageError unless 0 < alpha, beta, gamma < 1; DomainError when nu <= 0.
BoundConstants bound_constants(const Rational& alpha, const Rational& beta, const Rational& gamma);

struct SylvesterGallaiReport {
  bool holds = false;
  bool collinear = false;
  std::size_t ordinary = 0;
  std::optional<CanonLine2> witness;
};

/// Planar sets with at least three points. Over Q the result always holds.
SylvesterGallaiReport verify_sylvester_gallai(const PointSet& set);

struct SkewBoundReport {
  std::size_t n = 0;
  std::size_t on_first = 0;
  std::size_t on_second = 0;
  std::size_t lhs = 0;    ///< ordinary lines of the set
  std::int64_t rhs = 0;   ///< on_first * on_second - n
  bool holds = false;
};

/// Throws UsageError when the two lines are coplanar.
SkewBoundReport verify_skew_bound(const PointSet& set, const CanonLine3& first,
                                  const CanonLine3& second);

struct AlmostCoplanarReport {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t max_coplanar = 0;
  std::size_t count = 0;
  Rational bound;  ///< (k + 1/2)(n - k) - C(k, 2)
  bool holds = false;
  std::string caveat;
};

/// Throws UsageError naming the offending plane when some plane holds more than n - k points.
AlmostCoplanarReport verify_almost_coplanar(const PointSet& set, std::size_t k);

struct SmallLineCounts {
  std::size_t n = 0;
  std::size_t n_squared = 0;
  std::size_t lines_le3 = 0;
  std::size_t lines_le4 = 0;
};

SmallLineCounts small_line_counts(const PointSet& set);

struct ConcurrentProbe {
  std::size_t contained_in = 0;            ///< lines through the apex needed to cover the set
  std::size_t ordinary_avoiding_apex = 0;  ///< ordinary lines of the set missing the apex
  bool guarantee_applies = false;          ///< rational field and 3 or 4 lines
  bool holds = true;
};

/// Planar sets not contained in one line; the apex must match the set's kind and field.
ConcurrentProbe concurrent_lines_probe(const PointSet& set, const Point& apex);

struct BeckReport {
  std::size_t n = 0;
  std::size_t num_lines = 0;
  std::size_t max_collinear = 0;
  Rational ratio_lines;      ///< num_lines / n^2
  Rational ratio_collinear;  ///< max_collinear / n
  bool beta_hypothesis = false;  ///< ratio_collinear <= 2/3
  bool gamma_reached = false;    ///< ratio_lines >= 1/9
};

BeckReport beck_report(const PointSet& set);

}  // namespace ordlines
