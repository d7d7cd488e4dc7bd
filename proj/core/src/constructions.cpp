#include "ordlines/constructions.hpp"

#include <unordered_set>

#include "ordlines/error.hpp"
#include "ordlines/incidence.hpp"
#include "ordlines/random.hpp"

namespace ordlines {

namespace {

std::string num(std::size_t v) { return std::to_string(v); }

Point random_point(Rng& rng, int dim, std::int64_t bound) {
  if (dim == 2) return affine(rng.rational(bound), rng.rational(bound));
  return affine(rng.rational(bound), rng.rational(bound), rng.rational(bound));
}

/// Appends points drawn by `draw` until `count` new distinct ones were added.
template <typename Draw>
void fill_distinct(std::vector<Point>& pts, std::unordered_set<Point, PointHash>& seen,
                   std::size_t count, Draw&& draw) {
  for (std::size_t added = 0; added < count;) {
    Point p = draw();
    if (seen.insert(p).second) {
      pts.push_back(std::move(p));
      ++added;
    }
  }
}

}  // namespace

PointSet gen_two_skew(std::size_t m) {
  if (m < 2) throw UsageError("gen_two_skew needs m >= 2");
  std::vector<Point> pts;
  pts.reserve(2 * m);
  for (std::size_t t = 1; t <= m; ++t) pts.push_back(affine(Scalar(static_cast<long>(t)), 0, 0));
  for (std::size_t t = 1; t <= m; ++t) pts.push_back(affine(0, Scalar(static_cast<long>(t)), 1));
  return PointSet(std::move(pts), "two-skew m=" + num(m));
}

std::size_t near_coplanar_ordinary(std::size_t n, std::size_t k, std::size_t ord_planar) {
  if (k == 1) return (n - 1) + ord_planar;
  return k * (n - k) + ord_planar - k;
}

PointSet gen_near_coplanar(std::size_t n, std::size_t k, std::uint64_t seed, std::int64_t bound) {
  if (k < 1 || n < k + 4) throw UsageError("gen_near_coplanar needs k >= 1 and n - k >= 4");
  Rng rng(seed);
  const std::size_t planar = n - k;
  for (int attempt = 0; attempt < kGenerationRetries; ++attempt) {
    std::vector<Point> pts{affine(0, 0, 0)};
    std::unordered_set<Point, PointHash> seen{pts.front()};
    fill_distinct(pts, seen, planar - 1,
                  [&] { return affine(rng.rational(bound), rng.rational(bound), 0); });
    for (std::size_t t = 1; t <= k; ++t) pts.push_back(affine(0, 0, Scalar(static_cast<long>(t))));
    PointSet set(std::move(pts), "near-coplanar n=" + num(n) + " k=" + num(k) +
                                     " seed=" + std::to_string(seed));

    if (plane_summary(set).max_coplanar != planar) continue;

    bool accidental = false;
    for (const auto& line : spanned_lines(set)) {
      if (line.members.size() < 3) continue;
      bool touches_off = line.members.back() >= planar;
      bool is_axis = line.members.front() == 0 && line.members.back() >= planar &&
                     std::all_of(line.members.begin() + 1, line.members.end(),
                                 [&](std::size_t m) { return m >= planar; });
      if (touches_off && !is_axis) accidental = true;
    }
    if (!accidental) return set;
  }
  throw GenerationError("gen_near_coplanar(n=" + num(n) + ", k=" + num(k) + ") failed after " +
                        std::to_string(kGenerationRetries) + " attempts");
}

PointSet gen_coplanar_heavy(std::size_t n, const Rational& alpha, std::uint64_t seed,
                            std::int64_t bound) {
  if (sgn(alpha) <= 0) throw UsageError("alpha must be positive");
  Integer floor_val;
  mpz_fdiv_q(floor_val.get_mpz_t(), Integer(alpha.get_num() * static_cast<unsigned long>(n)).get_mpz_t(),
             alpha.get_den_mpz_t());
  if (floor_val < 3 || floor_val > static_cast<unsigned long>(n)) {
    throw UsageError("gen_coplanar_heavy needs 3 <= floor(alpha*n) <= n");
  }
  const std::size_t heavy = floor_val.get_ui();
  Rng rng(seed);
  for (int attempt = 0; attempt < kGenerationRetries; ++attempt) {
    std::vector<Point> pts;
    std::unordered_set<Point, PointHash> seen;
    fill_distinct(pts, seen, heavy,
                  [&] { return affine(rng.rational(bound), rng.rational(bound), 0); });
    fill_distinct(pts, seen, n - heavy, [&] {
      Rational z;
      do {
        z = rng.rational(bound);
      } while (sgn(z) == 0);
      return affine(rng.rational(bound), rng.rational(bound), z);
    });
    PointSet set(std::move(pts), "coplanar-heavy n=" + num(n) + " alpha=" + alpha.get_str() +
                                     " seed=" + std::to_string(seed));
    if (all_collinear(set)) continue;
    if (plane_summary(set).max_coplanar == heavy) return set;
  }
  throw GenerationError("gen_coplanar_heavy(n=" + num(n) + ", alpha=" + alpha.get_str() +
                        ") failed after " + std::to_string(kGenerationRetries) + " attempts");
}

PointSet gen_random(std::size_t n, int dim, std::int64_t bound, std::uint64_t seed) {
  if (n < 1) throw UsageError("gen_random needs n >= 1");
  if (dim != 2 && dim != 3) throw UsageError("gen_random needs dim 2 or 3");
  if (bound < 1) throw UsageError("gen_random needs bound >= 1");
  Rng rng(seed);
  std::vector<Point> pts;
  std::unordered_set<Point, PointHash> seen;
  fill_distinct(pts, seen, n, [&] { return random_point(rng, dim, bound); });
  return PointSet(std::move(pts), "random n=" + num(n) + " dim=" + std::to_string(dim) +
                                      " bound=" + std::to_string(bound) +
                                      " seed=" + std::to_string(seed));
}

PointSet gen_hesse() {
  const Scalar zero = Scalar::eisenstein(0, 0);
  const Scalar one = Scalar::eisenstein(1, 0);
  const Scalar w = Scalar::omega();
  const Scalar w2 = w * w;  // -1 - w
  const std::array<Scalar, 3> roots{one, w, w2};
  std::vector<Point> pts;
  for (const auto& r : roots) pts.push_back(projective(zero, one, -r));
  for (const auto& r : roots) pts.push_back(projective(one, zero, -r));
  for (const auto& r : roots) pts.push_back(projective(one, -r, zero));
  return PointSet(std::move(pts), "hesse");
}

PointSet gen_grid2d(std::size_t a, std::size_t b) {
  if (a < 2 || b < 2) throw UsageError("gen_grid2d needs a, b >= 2");
  std::vector<Point> pts;
  pts.reserve(a * b);
  for (std::size_t x = 1; x <= a; ++x) {
    for (std::size_t y = 1; y <= b; ++y) {
      pts.push_back(affine(Scalar(static_cast<long>(x)), Scalar(static_cast<long>(y))));
    }
  }
  return PointSet(std::move(pts), "grid " + num(a) + "x" + num(b));
}

}  // namespace ordlines
