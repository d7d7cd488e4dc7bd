#include "detail/frame.hpp"

#include <algorithm>
#include <unordered_map>

#include "ordlines/canonical.hpp"
#include "ordlines/error.hpp"

namespace ordlines::detail {

std::size_t KeyHash::operator()(const Key& k) const {
  std::size_t seed = k.size();
  for (const auto& x : k) hash_combine(seed, hash_integer(x));
  return seed;
}

bool key_less(const Key& a, const Key& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

Frame::Frame(const PointSet& set) : Frame(set.points()) {}

Frame::Frame(std::span<const Point> points)
    : size_(points.size()), kind_(points.front().kind()), field_(points.front().field()) {
  if (field_ == Field::eisenstein) {
    scalars_.reserve(size_);
    for (const auto& p : points) scalars_.push_back(p.homogeneous());
    return;
  }
  ints_.resize(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    const Point& p = points[i];
    Integer common = 1;
    for (const auto& c : p.coords()) {
      mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.real_part().get_den_mpz_t());
    }
    auto scaled = [&](std::size_t c) {
      const Rational& v = p[c].real_part();
      return Integer(v.get_num() * (common / v.get_den()));
    };
    auto& h = ints_[i];
    switch (kind_) {
      case PointKind::affine2:
        h = {scaled(0), scaled(1), common, 0};
        break;
      case PointKind::affine3:
        h = {common, scaled(0), scaled(1), scaled(2)};
        break;
      case PointKind::projective2:
        h = {scaled(0), scaled(1), scaled(2), 0};
        break;
    }
  }
}

namespace {

Integer det3(const Integer& a, const Integer& b, const Integer& c,  //
             const Integer& d, const Integer& e, const Integer& f,  //
             const Integer& g, const Integer& h, const Integer& i) {
  return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

}  // namespace

Key Frame::line_key(std::size_t i, std::size_t j) const {
  if (field_ == Field::eisenstein) {
    const auto& a = scalars_[i];
    const auto& b = scalars_[j];
    std::array<Scalar, 3> cross{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                                a[0] * b[1] - a[1] * b[0]};
    auto lead = std::find_if(cross.begin(), cross.end(),
                             [](const Scalar& s) { return !s.is_zero(); });
    if (lead == cross.end()) throw DegenerateInputError("line through coincident points");
    Scalar inv = lead->inverse();
    Key key;
    key.reserve(12);
    for (auto& c : cross) {
      c *= inv;
      key.push_back(c.real_part().get_num());
      key.push_back(c.real_part().get_den());
      key.push_back(c.omega_part().get_num());
      key.push_back(c.omega_part().get_den());
    }
    return key;
  }

  const auto& a = ints_[i];
  const auto& b = ints_[j];
  Key key;
  if (kind_ == PointKind::affine3) {
    key.resize(6);
    key[0] = a[0] * b[1] - a[1] * b[0];
    key[1] = a[0] * b[2] - a[2] * b[0];
    key[2] = a[0] * b[3] - a[3] * b[0];
    key[3] = a[1] * b[2] - a[2] * b[1];
    key[4] = a[1] * b[3] - a[3] * b[1];
    key[5] = a[2] * b[3] - a[3] * b[2];
  } else {
    key.resize(3);
    key[0] = a[1] * b[2] - a[2] * b[1];
    key[1] = a[2] * b[0] - a[0] * b[2];
    key[2] = a[0] * b[1] - a[1] * b[0];
  }
  make_primitive(key);
  return key;
}

Key Frame::plane_key(std::size_t i, std::size_t j, std::size_t k) const {
  if (kind_ != PointKind::affine3 || field_ != Field::rational) {
    throw UsageError("plane keys need a rational Affine3 set");
  }
  // Rows in (X, Y, Z, W) order; the cofactor vector is (a, b, c, d).
  auto row = [&](std::size_t p) {
    const auto& h = ints_[p];
    return std::array<const Integer*, 4>{&h[1], &h[2], &h[3], &h[0]};
  };
  auto u = row(i);
  auto v = row(j);
  auto w = row(k);
  auto minor = [&](int skip) {
    std::array<int, 3> cols{};
    for (int c = 0, n = 0; c < 4; ++c) {
      if (c != skip) cols[n++] = c;
    }
    return det3(*u[cols[0]], *u[cols[1]], *u[cols[2]],  //
                *v[cols[0]], *v[cols[1]], *v[cols[2]],  //
                *w[cols[0]], *w[cols[1]], *w[cols[2]]);
  };
  Key key{minor(0), Integer(-minor(1)), minor(2), Integer(-minor(3))};
  if (sgn(key[0]) == 0 && sgn(key[1]) == 0 && sgn(key[2]) == 0 && sgn(key[3]) == 0) return {};
  make_primitive(key);
  return key;
}

namespace {

std::vector<Group> finish(std::unordered_map<Key, std::vector<std::size_t>, KeyHash>&& map) {
  std::vector<Group> groups;
  groups.reserve(map.size());
  for (auto& [key, members] : map) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    groups.push_back(Group{key, std::move(members)});
  }
  std::sort(groups.begin(), groups.end(),
            [](const Group& a, const Group& b) { return key_less(a.key, b.key); });
  return groups;
}

}  // namespace

std::vector<Group> group_lines(const Frame& frame) {
  const std::size_t n = frame.size();
  std::unordered_map<Key, std::vector<std::size_t>, KeyHash> map;
  map.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto& members = map[frame.line_key(i, j)];
      members.push_back(i);
      members.push_back(j);
    }
  }
  return finish(std::move(map));
}

std::vector<Group> group_planes(const Frame& frame, const std::vector<Group>& lines) {
  const std::size_t n = frame.size();
  std::unordered_map<Key, std::vector<std::size_t>, KeyHash> map;
  std::vector<char> on_line(n);
  for (const auto& line : lines) {
    std::fill(on_line.begin(), on_line.end(), 0);
    for (std::size_t m : line.members) on_line[m] = 1;
    const std::size_t a = line.members[0];
    const std::size_t b = line.members[1];
    for (std::size_t p = 0; p < n; ++p) {
      if (on_line[p]) continue;
      auto& members = map[frame.plane_key(a, b, p)];
      members.insert(members.end(), line.members.begin(), line.members.end());
      members.push_back(p);
    }
  }
  return finish(std::move(map));
}

std::size_t count_ordinary(const Frame& frame) {
  const std::size_t n = frame.size();
  // A line is ordinary iff exactly one pair maps to its key.
  std::unordered_map<Key, std::size_t, KeyHash> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) ++pairs[frame.line_key(i, j)];
  }
  return static_cast<std::size_t>(
      std::count_if(pairs.begin(), pairs.end(), [](const auto& kv) { return kv.second == 1; }));
}

}  // namespace ordlines::detail
