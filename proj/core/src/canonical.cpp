#include "ordlines/canonical.hpp"

#include <algorithm>

#include "ordlines/error.hpp"
#include "ordlines/predicates.hpp"

namespace ordlines {

namespace {

template <std::size_t N>
std::strong_ordering compare_integers(const std::array<Integer, N>& a,
                                      const std::array<Integer, N>& b) {
  for (std::size_t i = 0; i < N; ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

template <std::size_t N>
std::string join(const std::array<Integer, N>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < N; ++i) {
    if (i) out += ", ";
    out += v[i].get_str();
  }
  return out + ")";
}

template <std::size_t N>
std::size_t hash_array(const std::array<Integer, N>& v) {
  std::size_t seed = N;
  for (const auto& x : v) hash_combine(seed, hash_integer(x));
  return seed;
}

/// Scales a rational vector to a primitive integer vector with positive leading entry.
template <std::size_t N>
std::array<Integer, N> primitive_from(const std::array<Rational, N>& v) {
  Integer common = 1;
  for (const auto& x : v) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), x.get_den_mpz_t());
  std::array<Integer, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = v[i].get_num() * (common / v[i].get_den());
  make_primitive(out);
  return out;
}

std::array<Rational, 4> affine3_homogeneous(const Point& p) {
  return {Rational(1), p[0].real_part(), p[1].real_part(), p[2].real_part()};
}

void require_rational_affine3(const Point& p, const char* what) {
  if (p.kind() != PointKind::affine3) {
    throw UsageError(std::string(what) + " needs an Affine3 point, got " +
                     std::string(to_string(p.kind())));
  }
  if (p.field() != Field::rational) throw UsageError(std::string(what) + " needs rational points");
}

}  // namespace

void make_primitive(std::span<Integer> v) {
  Integer content = 0;
  for (const auto& x : v) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
  if (sgn(content) == 0) throw DegenerateInputError("zero coefficient vector");
  auto lead = std::find_if(v.begin(), v.end(), [](const Integer& x) { return sgn(x) != 0; });
  if (sgn(*lead) < 0) content = -content;
  if (content != 1) {
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
  }
}

std::string CanonLine2::to_string() const {
  std::string out = "line2(";
  for (std::size_t i = 0; i < 3; ++i) {
    if (i) out += ", ";
    out += coeffs_[i].to_string();
  }
  return out + ")";
}

std::size_t CanonLine2::hash() const {
  std::size_t seed = static_cast<std::size_t>(kind_);
  for (const auto& c : coeffs_) hash_combine(seed, c.hash());
  return seed;
}

Integer CanonLine3::quadric() const {
  const auto& p = plucker_;
  return p[0] * p[5] - p[1] * p[4] + p[2] * p[3];
}

std::string CanonLine3::to_string() const { return "line3" + join(plucker_); }

std::size_t CanonLine3::hash() const { return hash_array(plucker_); }

std::strong_ordering operator<=>(const CanonLine3& lhs, const CanonLine3& rhs) {
  return compare_integers(lhs.plucker_, rhs.plucker_);
}

std::string CanonPlane::to_string() const { return "plane" + join(coeffs_); }

std::size_t CanonPlane::hash() const { return hash_array(coeffs_); }

std::strong_ordering operator<=>(const CanonPlane& lhs, const CanonPlane& rhs) {
  return compare_integers(lhs.coeffs_, rhs.coeffs_);
}

std::string to_string(const CanonLine& line) {
  return std::visit([](const auto& l) { return l.to_string(); }, line);
}

CanonLine canon_line(const Point& p, const Point& q) {
  if (p.kind() == PointKind::affine3) return canon_line3(p, q);
  return canon_line2(p, q);
}

CanonLine2 canon_line2(const Point& p, const Point& q) {
  const std::array<const Point*, 2> pts{&p, &q};
  require_compatible(pts);
  if (p.kind() == PointKind::affine3) throw UsageError("canon_line2 needs planar points");
  if (p == q) throw DegenerateInputError("line through coincident points " + p.to_string());

  auto a = p.homogeneous();
  auto b = q.homogeneous();
  std::array<Scalar, 3> cross{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                              a[0] * b[1] - a[1] * b[0]};

  if (p.field() == Field::rational) {
    std::array<Rational, 3> r{cross[0].real_part(), cross[1].real_part(), cross[2].real_part()};
    auto ints = primitive_from(r);
    return CanonLine2(p.kind(), Field::rational,
                      {Scalar(ints[0]), Scalar(ints[1]), Scalar(ints[2])});
  }
  auto lead = std::find_if(cross.begin(), cross.end(), [](const Scalar& s) { return !s.is_zero(); });
  Scalar inv = lead->inverse();
  for (auto& c : cross) c = (c * inv).in_field(Field::eisenstein);
  return CanonLine2(p.kind(), Field::eisenstein, std::move(cross));
}

CanonLine3 canon_line3(const Point& p, const Point& q) {
  const std::array<const Point*, 2> pts{&p, &q};
  require_compatible(pts);
  require_rational_affine3(p, "canon_line3");
  if (p == q) throw DegenerateInputError("line through coincident points " + p.to_string());

  auto a = affine3_homogeneous(p);
  auto b = affine3_homogeneous(q);
  std::array<Rational, 6> pl;
  constexpr std::array<std::pair<int, int>, 6> idx{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  for (std::size_t k = 0; k < 6; ++k) {
    auto [i, j] = idx[k];
    pl[k] = a[i] * b[j] - a[j] * b[i];
  }
  return CanonLine3(primitive_from(pl), p, q);
}

CanonPlane canon_plane(const Point& p, const Point& q, const Point& r) {
  const std::array<const Point*, 3> pts{&p, &q, &r};
  require_compatible(pts);
  require_rational_affine3(p, "canon_plane");

  std::array<Rational, 3> u, v;
  for (std::size_t i = 0; i < 3; ++i) {
    u[i] = q[i].real_part() - p[i].real_part();
    v[i] = r[i].real_part() - p[i].real_part();
  }
  std::array<Rational, 4> plane{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                                u[0] * v[1] - u[1] * v[0], 0};
  if (sgn(plane[0]) == 0 && sgn(plane[1]) == 0 && sgn(plane[2]) == 0) {
    throw DegenerateInputError("plane through collinear points " + p.to_string() + ", " +
                               q.to_string() + ", " + r.to_string());
  }
  plane[3] = -(plane[0] * p[0].real_part() + plane[1] * p[1].real_part() +
               plane[2] * p[2].real_part());
  return CanonPlane(primitive_from(plane));
}

bool incident(const CanonLine2& line, const Point& p) {
  if (p.kind() != line.kind()) {
    throw UsageError("incidence of a " + std::string(to_string(line.kind())) + " line with a " +
                     std::string(to_string(p.kind())) + " point");
  }
  if (p.field() != line.field()) throw UsageError("incidence across fields");
  auto h = p.homogeneous();
  const auto& c = line.coeffs();
  return (c[0] * h[0] + c[1] * h[1] + c[2] * h[2]).is_zero();
}

bool incident(const CanonLine3& line, const Point& p) {
  require_rational_affine3(p, "incident(CanonLine3)");
  return collinear(line.first_point(), line.second_point(), p);
}

bool incident(const CanonPlane& plane, const Point& p) {
  require_rational_affine3(p, "incident(CanonPlane)");
  const auto& c = plane.coeffs();
  Rational v = c[0] * p[0].real_part() + c[1] * p[1].real_part() + c[2] * p[2].real_part() + c[3];
  return sgn(v) == 0;
}

bool incident(const CanonLine& line, const Point& p) {
  return std::visit([&](const auto& l) { return incident(l, p); }, line);
}

Integer reciprocal_product(const CanonLine3& l, const CanonLine3& m) {
  const auto& p = l.plucker();
  const auto& q = m.plucker();
  return p[0] * q[5] - p[1] * q[4] + p[2] * q[3] + p[3] * q[2] - p[4] * q[1] + p[5] * q[0];
}

bool skew(const CanonLine3& l, const CanonLine3& m) { return sgn(reciprocal_product(l, m)) != 0; }

}  // namespace ordlines
