#include "ordlines/search.hpp"

#include <array>
#include <unordered_map>

#include "detail/frame.hpp"
#include "ordlines/constructions.hpp"
#include "ordlines/error.hpp"
#include "ordlines/incidence.hpp"
#include "ordlines/predicates.hpp"
#include "ordlines/random.hpp"

namespace ordlines {

namespace {

// round(exp(-k/4) * 2^32) for k = 0..32.
constexpr std::array<std::uint64_t, 33> kExpTable{
    4294967296, 3344923893, 2605029347, 2028798896, 1580030169, 1230528733, 958336741,
    746353404,  581260615,  452686223,  352552385,  274568073,  213833830,  166533955,
    129696774,  101007949,  78665070,   61264418,   47712777,   37158748,   28939262,
    22537920,   17552550,   13669939,   10646160,   8291237,    6457222,    5028890,
    3916503,    3050176,    2375479,    1850025,    1440801};

const Integer kFixedOne = Integer(1) << 32;

Integer as_integer(std::uint64_t v) {
  Integer out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return out;
}

bool fits_bits(const Point& p, std::size_t bits) {
  for (const auto& c : p.coords()) {
    if (mpz_sizeinbase(c.real_part().get_num_mpz_t(), 2) > bits) return false;
    if (mpz_sizeinbase(c.real_part().get_den_mpz_t(), 2) > bits) return false;
  }
  return true;
}

/// Largest plane through point `i`, or n when every point is collinear with i's neighbours.
std::size_t heaviest_plane_through(const detail::Frame& frame, std::size_t i) {
  const std::size_t n = frame.size();
  std::unordered_map<detail::Key, std::vector<char>, detail::KeyHash> planes;
  std::size_t heaviest = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == i) continue;
    for (std::size_t k = j + 1; k < n; ++k) {
      if (k == i) continue;
      auto key = frame.plane_key(i, j, k);
      if (key.empty()) continue;
      auto& on = planes[std::move(key)];
      if (on.empty()) on.assign(n, 0);
      on[i] = on[j] = on[k] = 1;
    }
  }
  if (planes.empty()) return n;
  for (const auto& [key, on] : planes) {
    heaviest = std::max(heaviest, static_cast<std::size_t>(std::count(on.begin(), on.end(), 1)));
  }
  return heaviest;
}

class Annealer {
 public:
  explicit Annealer(const SearchConfig& config)
      : config_(config), rng_(config.seed), cap_(coplanar_cap(config.n, config.alpha)) {}

  SearchResult run();

 private:
  std::vector<Point> initial_points();
  std::optional<Point> propose(std::size_t i, unsigned move);
  std::size_t other_index(std::size_t exclude_a, std::size_t exclude_b = SIZE_MAX,
                          std::size_t exclude_c = SIZE_MAX);
  Point random_point() {
    const auto b = config_.coordinate_bound;
    return affine(rng_.rational(b), rng_.rational(b), rng_.rational(b));
  }
  bool accept_worse(std::size_t delta);

  const SearchConfig& config_;
  Rng rng_;
  std::size_t cap_;
  std::vector<Point> current_;
  Integer temperature_;  // fixed point, scaled by 2^32
};

std::size_t Annealer::other_index(std::size_t a, std::size_t b, std::size_t c) {
  for (;;) {
    std::size_t j = rng_.index(config_.n);
    if (j != a && j != b && j != c) return j;
  }
}

std::vector<Point> Annealer::initial_points() {
  if (config_.initial) {
    const PointSet& init = *config_.initial;
    if (init.kind() != PointKind::affine3 || init.field() != Field::rational) {
      throw UsageError("initial set must be rational Affine3");
    }
    if (init.size() != config_.n) {
      throw UsageError("initial set has " + std::to_string(init.size()) + " points, config says " +
                       std::to_string(config_.n));
    }
    std::size_t heaviest = max_coplanar_or_n(init);
    if (heaviest > cap_) {
      throw UsageError("initial set has " + std::to_string(heaviest) +
                       " coplanar points, above the cap " + std::to_string(cap_));
    }
    return {init.begin(), init.end()};
  }
  for (int attempt = 0; attempt < kGenerationRetries; ++attempt) {
    std::vector<Point> pts;
    while (pts.size() < config_.n) {
      Point p = random_point();
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(std::move(p));
    }
    if (max_coplanar_or_n(PointSet(pts)) <= cap_) return pts;
  }
  throw GenerationError("no random start satisfies the coplanar cap");
}

std::optional<Point> Annealer::propose(std::size_t i, unsigned move) {
  const auto b = config_.coordinate_bound;
  const Point& p = current_[i];
  switch (move) {
    case 0: {
      std::vector<Scalar> c(p.coords().begin(), p.coords().end());
      c[rng_.index(3)] = rng_.rational(b);
      return Point(PointKind::affine3, std::move(c));
    }
    case 1: {
      std::size_t j = other_index(i);
      std::size_t k = other_index(i, j);
      Scalar t = rng_.rational(b);
      const Point& a = current_[j];
      const Point& d = current_[k];
      return affine(a[0] + t * (d[0] - a[0]), a[1] + t * (d[1] - a[1]), a[2] + t * (d[2] - a[2]));
    }
    case 2: {
      std::size_t j = other_index(i);
      std::size_t k = other_index(i, j);
      std::size_t l = other_index(i, j, k);
      const Point& a = current_[j];
      const Point& d = current_[k];
      const Point& e = current_[l];
      Scalar s = rng_.rational(b);
      Scalar u = rng_.rational(b);
      if (collinear(a, d, e)) return std::nullopt;
      std::vector<Scalar> c(3);
      for (std::size_t x = 0; x < 3; ++x) c[x] = a[x] + s * (d[x] - a[x]) + u * (e[x] - a[x]);
      return Point(PointKind::affine3, std::move(c));
    }
    default:
      return random_point();
  }
}


bool Annealer::accept_worse(std::size_t delta) {
  if (sgn(temperature_) == 0) return false;
  Rational x(Integer(kFixedOne * static_cast<unsigned long>(delta)), temperature_);
  x.canonicalize();
  Rational threshold = acceptance_threshold(x);
  Integer u(static_cast<unsigned long>(rng_.next() >> 32));
  return Rational(u) < threshold;
}

SearchResult Annealer::run() {
  current_ = initial_points();
  const std::size_t n = config_.n;
  std::size_t current_count = detail::count_ordinary(detail::Frame(current_));

  SearchResult result{PointSet(current_), current_count, current_count, 0, cap_, 0, config_.iterations,
                      0, {{0, current_count}}, {}};
  const Rational t0 = config_.initial_temperature * Rational(kFixedOne);
  mpz_fdiv_q(temperature_.get_mpz_t(), t0.get_num_mpz_t(), t0.get_den_mpz_t());

  const auto& w = config_.weights;
  const std::array<unsigned, 4> weights{w.perturb, w.snap_to_line, w.snap_to_plane, w.restart_point};
  const std::int64_t total = static_cast<std::int64_t>(w.perturb) + w.snap_to_line + w.snap_to_plane +
                             w.restart_point;

  for (std::size_t iter = 1; iter <= config_.iterations; ++iter) {
    std::int64_t r = rng_.uniform(0, total - 1);
    unsigned move = 0;
    while (r >= static_cast<std::int64_t>(weights[move])) r -= weights[move++];

    const std::size_t i = rng_.index(n);
    std::optional<Point> candidate = propose(i, move);

    bool accepted = false;
    if (candidate && fits_bits(*candidate, config_.max_coordinate_bits) &&
        std::find(current_.begin(), current_.end(), *candidate) == current_.end()) {
      std::vector<Point> next = current_;
      next[i] = std::move(*candidate);
      detail::Frame frame(next);
      if (heaviest_plane_through(frame, i) <= cap_) {
        std::size_t count = detail::count_ordinary(frame);
        if (count <= current_count || accept_worse(count - current_count)) {
          accepted = true;
          current_ = std::move(next);
          current_count = count;
        }
      }
    }
    if (accepted) {
      ++result.accepted_moves;
      if (current_count < result.best_count) {
        result.best_count = current_count;
        result.best = PointSet(current_);
        result.trace.push_back({iter, current_count});
      }
    }
    temperature_ = temperature_ * config_.decay.get_num() / config_.decay.get_den();
  }

  result.best = PointSet(std::vector<Point>(result.best.begin(), result.best.end()),
                         "search n=" + std::to_string(n) + " alpha=" + config_.alpha.get_str() +
                             " seed=" + std::to_string(config_.seed));
  const std::size_t recount = span_summary(result.best).ordinary;
  if (recount != result.best_count) {
    throw InvariantViolation("search tracked " + std::to_string(result.best_count) +
                             " ordinary lines but a recount gives " + std::to_string(recount));
  }
  result.max_coplanar = max_coplanar_or_n(result.best);
  if (result.max_coplanar > cap_) {
    throw InvariantViolation("search result breaks the coplanar cap");
  }
  result.ratio = Rational(static_cast<long>(result.best_count), static_cast<long>(n * n));
  result.ratio.canonicalize();

  if (!all_collinear(result.best)) {
    for (const auto& plane : spanned_planes(result.best)) {
      if (plane.members.size() < 4) continue;
      PointSet in_plane = result.best.subset(plane.members);
      result.plane_stats.push_back(
          PlaneStat{plane.plane, plane.members.size(), span_summary(in_plane).ordinary});
    }
  }
  return result;
}

}  // namespace

SearchResult minimize_ordinary(const SearchConfig& config) {
  if (config.n < 3) throw UsageError("search needs n >= 3");
  if (sgn(config.alpha) <= 0) throw UsageError("alpha must be positive");
  const std::size_t cap = coplanar_cap(config.n, config.alpha);
  if (cap < 3) {
    throw UsageError("coplanar cap floor(alpha*n) = " + std::to_string(cap) + " is below 3");
  }
  const auto& w = config.weights;
  if (w.perturb + w.snap_to_line + w.snap_to_plane + w.restart_point == 0) {
    throw UsageError("move weights are all zero");
  }
  if (config.coordinate_bound < 1) throw UsageError("coordinate bound must be positive");
  if (sgn(config.initial_temperature) < 0) throw UsageError("temperature must be nonnegative");
  if (sgn(config.decay) < 0 || config.decay > 1) throw UsageError("decay must lie in [0, 1]");
  return Annealer(config).run();
}

std::size_t coplanar_cap(std::size_t n, const Rational& alpha) {
  if (sgn(alpha) < 0) return 0;
  Integer v = alpha.get_num() * static_cast<unsigned long>(n);
  mpz_fdiv_q(v.get_mpz_t(), v.get_mpz_t(), alpha.get_den_mpz_t());
  return v.get_ui();
}

std::size_t max_coplanar_or_n(const PointSet& set) {
  if (set.size() < 3 || all_collinear(set)) return set.size();
  return plane_summary(set).max_coplanar;
}

Rational acceptance_threshold(const Rational& x) {
  if (sgn(x) <= 0) return Rational(kFixedOne);
  Rational scaled = 4 * x;
  Integer idx;
  mpz_fdiv_q(idx.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  if (idx >= 32) return Rational(0);
  const std::size_t k = idx.get_ui();
  Rational frac = scaled - idx;
  const Integer lo = as_integer(kExpTable[k]);
  const Integer hi = as_integer(kExpTable[k + 1]);
  return Rational(lo) + Rational(hi - lo) * frac;
}

}  // namespace ordlines
