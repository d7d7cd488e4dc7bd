// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include <ordlines/ordlines.hpp>

#include "support/oracle.hpp"

namespace {

using namespace ordlines;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (!condition && pass) {
      pass = false;
      detail << what;
    }
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<PointSet> catalogue_sets() {
  std::vector<PointSet> sets = oracle::small_catalogue();
  sets.push_back(gen_two_skew(10));
  sets.push_back(gen_near_coplanar(20, 3, 1));
  sets.push_back(gen_coplanar_heavy(20, Rational(3, 5), 1));
  sets.push_back(gen_grid2d(4, 5));
  return sets;
}

void skew_construction(Outcome& o) {
  for (std::size_t m = 3; m <= 15; ++m) {
    const auto start = Clock::now();
    const std::size_t ordinary = span_summary(gen_two_skew(m)).ordinary;
    const double took = seconds_since(start);
    o.require(ordinary == m * m, "m=" + std::to_string(m) + " ordinary=" + std::to_string(ordinary));
    o.require(took < 1.0, "m=" + std::to_string(m) + " took " + std::to_string(took) + " s");
  }
  if (o.pass) o.detail << "m=10: 100 = n^2/4; m^2 for m in 3..15";
}

void constants(Outcome& o) {
  const BoundConstants c = bound_constants(Rational(1, 2), kBeckBeta, kBeckGamma);
  o.require(c.alpha0 == Rational(2, 27), "alpha0=" + c.alpha0.get_str());
  o.require(c.c_alpha0 == Rational(1, 118098), "c_alpha0=" + c.c_alpha0.get_str());
  for (long i = 1; i <= 99; ++i) {
    Rational alpha(i, 100);
    alpha.canonicalize();
    o.require(sgn(bound_constants(alpha, kBeckBeta, kBeckGamma).d_alpha) > 0, "d_alpha <= 0 at " + alpha.get_str());
  }
  if (o.pass) o.detail << "alpha0=2/27 c=1/118098, d_alpha>0 on 99 grid points";
}

void boroczky(Outcome& o) {
  for (std::size_t m = 4; m <= 50; m += 2) {
    std::set<std::vector<std::size_t>> from_pairs;
    for (std::size_t a = 0; a < 2 * m; ++a) {
      for (std::size_t b = a + 1; b < 2 * m; ++b) {
        auto line = boroczky_line_through(m, a, b);
        std::sort(line.begin(), line.end());
        from_pairs.insert(line);
      }
    }
    std::set<std::vector<std::size_t>> listed;
    for (auto line : boroczky_lines(m).lines) {
      std::sort(line.begin(), line.end());
      listed.insert(line);
    }
    o.require(listed == from_pairs, "line list disagrees with pair rules at m=" + std::to_string(m));
    const auto s = boroczky_model(m);
    o.require(s.ordinary == m && s.n == 2 * m, "m=" + std::to_string(m) + " ordinary=" + std::to_string(s.ordinary));
  }
  if (o.pass) o.detail << "ordinary = n/2 for even m in 4..50";
}

void hesse(Outcome& o) {
  const PointSet h = gen_hesse();
  const auto naive = oracle::histogram(oracle::lines(h));
  const SpanSummary s = span_summary(h);
  o.require(s.ordinary == 0 && s.lines_with(3) == 12, "hesse histogram wrong");
  o.require(s.t == naive, "hesse disagrees with oracle");
  for (auto d : point_degrees(h)) o.require(d == 4, "hesse degree " + std::to_string(d));
  std::size_t tested = 0;
  for (std::uint64_t seed = 1; tested < 200; ++seed) {
    const PointSet set = gen_random(3 + seed % 10, 2, 3, seed);
    if (all_collinear(set)) continue;
    ++tested;
    o.require(span_summary(set).ordinary >= 1, "no ordinary line: " + set.label());
  }
  if (o.pass) o.detail << "hesse t[3]=12, degrees 4; 200 random rational sets have ordinary >= 1";
}

void pair_identity(Outcome& o) {
  std::size_t checked = 0;
  for (const auto& set : catalogue_sets()) {
    o.require(oracle::pair_identity(span_summary(set)), "identity fails on " + set.label());
    ++checked;
  }
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    o.require(oracle::pair_identity(span_summary(gen_random(15, 2 + seed % 2, 3, seed))), "random seed");
    ++checked;
  }
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    SearchConfig config;
    config.n = 14;
    config.iterations = 300;
    config.seed = seed;
    o.require(oracle::pair_identity(span_summary(minimize_ordinary(config).best)), "search output");
    ++checked;
  }
  if (o.pass) o.detail << checked << " sets";
}

void oracle_equivalence(Outcome& o) {
  std::vector<PointSet> sets = oracle::small_catalogue();
  for (std::uint64_t seed = 1; seed <= 50; ++seed) sets.push_back(gen_random(4 + seed % 7, 2 + seed % 2, 2, seed));
  for (const auto& set : sets) {
    const auto naive = oracle::lines(set);
    o.require(span_summary(set).t == oracle::histogram(naive), "lines differ on " + set.label());
    if (set.kind() == PointKind::affine3 && !all_collinear(set)) {
      std::vector<std::size_t> sizes;
      for (const auto& m : oracle::planes(set)) sizes.push_back(m.size());
      std::sort(sizes.begin(), sizes.end());
      o.require(oracle::plane_sizes(plane_summary(set)) == sizes, "planes differ on " + set.label());
    }
  }
  if (o.pass) o.detail << sets.size() << " sets with n <= 10";
}

void projection(Outcome& o) {
  Rng rng(77);
  std::size_t triples = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const PointSet set = gen_random(6 + seed % 6, 3, 1, seed);
    const std::size_t center = rng.index(set.size());
    const ProjectionImage img = project_from(set, center);
    const ImagePoints q = image_point_set(img);
    std::size_t total = 0;
    for (const auto& g : img.groups) {
      total += g.sources.size();
      for (auto s : g.sources) {
        o.require(oracle::collinear(set[center], set[g.sources[0]], set[s]), "group not on a line through center");
      }
    }
    o.require(total == set.size() - 1, "group sizes do not sum to n-1");
    const auto& g = img.groups;
    for (std::size_t a = 0; a < g.size(); ++a) {
      for (std::size_t b = a + 1; b < g.size(); ++b) {
        for (std::size_t c = b + 1; c < g.size(); ++c) {
          ++triples;
          o.require(oracle::collinear(q.points[a], q.points[b], q.points[c]) ==
                        oracle::coplanar(set[center], set[g[a].sources[0]], set[g[b].sources[0]], set[g[c].sources[0]]),
                    "collinearity/coplanarity mismatch");
        }
      }
    }
  }
  if (o.pass) o.detail << "50 sets, " << triples << " image triples";
}

void kelly(Outcome& o) {
  const PointSet axes({affine(0, 0, 0), affine(1, 0, 0), affine(2, 0, 0), affine(0, 1, 0), affine(0, 2, 0),
                       affine(0, 0, 1), affine(0, 0, 2)});
  const KellyTraceReport r = kelly_trace(axes, 0);
  o.require(r.l1_size == 3, "l1_size=" + std::to_string(r.l1_size));
  o.require(r.found_ordinary.size() >= 3, "found " + std::to_string(r.found_ordinary.size()));
  for (std::size_t i = 0; i < r.found_ordinary.size(); ++i) {
    o.require(!incident(r.found_ordinary[i], axes[0]), "line through center");
    for (std::size_t j = i + 1; j < r.found_ordinary.size(); ++j) {
      o.require(!(r.found_ordinary[i] == r.found_ordinary[j]), "duplicate line");
    }
  }
  std::size_t runs = 0, violations = 0;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const PointSet set = gen_random(6 + seed % 7, 3, 1, seed + 1000);
    for (std::size_t c = 0; c < set.size(); ++c) {
      ++runs;
      try {
        kelly_trace(set, c);
      } catch (const InvariantViolation&) {
        ++violations;
      }
    }
  }
  o.require(violations == 0, std::to_string(violations) + " invariant violations");
  if (o.pass) o.detail << "three-axes l1=3, " << r.found_ordinary.size() << " lines; " << runs << " random traces clean";
}

void skew_bound(Outcome& o) {
  Rng rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 2 + rng.index(8);
    const PointSet base = gen_two_skew(m);
    std::vector<Point> pts(base.begin(), base.end());
    const std::size_t extra = 1 + rng.index(6);
    while (pts.size() < 2 * m + extra) {
      Point p = affine(rng.rational(3), rng.rational(3), rng.rational(3));
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(std::move(p));
    }
    const PointSet set(std::move(pts));
    const auto rep = verify_skew_bound(set, canon_line3(base[0], base[1]), canon_line3(base[m], base[m + 1]));
    o.require(rep.holds, "fails on trial " + std::to_string(trial));
  }
  if (o.pass) o.detail << "100 supersets";
}

void near_coplanar(Outcome& o) {
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{10, 2}, {20, 3}, {30, 3}}) {
    const PointSet set = gen_near_coplanar(n, k, 1);
    std::vector<std::size_t> planar(n - k);
    std::iota(planar.begin(), planar.end(), 0);
    const std::size_t ord_planar = span_summary(set.subset(planar)).ordinary;
    const std::size_t count = span_summary(set).ordinary;
    const std::size_t expected = k * (n - k) + ord_planar - k;
    o.require(count == expected, "(" + std::to_string(n) + "," + std::to_string(k) + ") count " +
                                     std::to_string(count) + " expected " + std::to_string(expected));
    const auto rep = verify_almost_coplanar(set, k);
    const Rational bound = (Rational(k) + Rational(1, 2)) * Rational(n - k) - Rational(k * (k - 1) / 2);
    o.require(rep.bound == bound && rep.count == count, "report mismatch");
    if (!o.detail.str().empty() && o.pass) o.detail << "; ";
    if (o.pass) o.detail << "(" << n << "," << k << "): " << count << " vs bound " << rep.bound.get_str();
  }
}

void search(Outcome& o) {
  const auto start = Clock::now();
  SearchConfig zero;
  zero.initial = gen_two_skew(10);
  zero.iterations = 0;
  const SearchResult z = minimize_ordinary(zero);
  o.require(z.best == *zero.initial && z.best_count == 100, "zero-iteration identity");

  SearchConfig config;
  config.initial = gen_two_skew(10);
  config.alpha = Rational(3, 5);
  config.iterations = 10000;
  config.seed = 1;
  const SearchResult r = minimize_ordinary(config);
  o.require(r.best_count <= 100, "best_count=" + std::to_string(r.best_count));
  o.require(span_summary(r.best).ordinary == r.best_count, "recount differs");
  o.require(plane_summary(r.best).max_coplanar <= coplanar_cap(20, config.alpha), "cap violated");
  o.require(minimize_ordinary(config) == r, "rerun differs");
  const double took = seconds_since(start);
  o.require(took < 60.0, "took " + std::to_string(took) + " s");
  if (o.pass) o.detail << "best_count=" << r.best_count << " in " << took << " s";
}

void affine_invariance(Outcome& o) {
  std::vector<PointSet> sets = {gen_two_skew(4),        gen_two_skew(6),
                                gen_near_coplanar(10, 2, 1), gen_coplanar_heavy(12, Rational(1, 2), 1),
                                gen_random(10, 3, 2, 1), gen_random(10, 2, 2, 2),
                                gen_grid2d(3, 3),       gen_grid2d(3, 4),
                                gen_hesse(),            gen_random(12, 3, 1, 3)};
  Rng rng(12);
  for (const auto& set : sets) {
    const SpanSummary s = span_summary(set);
    const bool spatial = set.kind() == PointKind::affine3 && !all_collinear(set);
    std::optional<PlaneSummary> p;
    if (spatial) p = plane_summary(set);
    for (int trial = 0; trial < 50; ++trial) {
      const PointSet image = oracle::random_affine_image(set, rng);
      o.require(span_summary(image) == s, "span summary changed on " + set.label());
      if (spatial) {
        const PlaneSummary q = plane_summary(image);
        o.require(oracle::plane_sizes(q) == oracle::plane_sizes(*p) && q.max_coplanar == p->max_coplanar,
                  "plane summary changed on " + set.label());
      }
    }
  }
  if (o.pass) o.detail << "10 sets x 50 maps";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"skew construction", skew_construction},
      {"bound constants", constants},
      {"boroczky model", boroczky},
      {"hesse and planar ordinary lines", hesse},
      {"pair identity", pair_identity},
      {"oracle equivalence", oracle_equivalence},
      {"radial projection", projection},
      {"kelly trace", kelly},
      {"skew-line bound", skew_bound},
      {"near-coplanar count", near_coplanar},
      {"search", search},
      {"affine invariance", affine_invariance},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << ": " << o.detail.str()
              << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
