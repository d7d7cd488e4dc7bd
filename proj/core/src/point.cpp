#include "ordlines/point.hpp"

#include <algorithm>

#include "ordlines/error.hpp"

namespace ordlines {

std::string_view to_string(PointKind kind) {
  switch (kind) {
    case PointKind::affine2:
      return "affine2";
    case PointKind::affine3:
      return "affine3";
    case PointKind::projective2:
      return "projective2";
  }
  return "?";
}

std::size_t coordinate_count(PointKind kind) { return kind == PointKind::affine2 ? 2 : 3; }

Point::Point(PointKind kind, std::vector<Scalar> coords)
    : kind_(kind), field_(Field::rational), coords_(std::move(coords)) {
  if (coords_.size() != coordinate_count(kind_)) {
    throw UsageError(std::string(ordlines::to_string(kind_)) + " point needs " +
                     std::to_string(coordinate_count(kind_)) + " coordinates, got " +
                     std::to_string(coords_.size()));
  }
  if (std::any_of(coords_.begin(), coords_.end(),
                  [](const Scalar& s) { return s.field() == Field::eisenstein; })) {
    field_ = Field::eisenstein;
  }
  if (field_ == Field::eisenstein) {
    if (kind_ == PointKind::affine3) {
      throw UsageError("3D points over Q(w) are not supported");
    }
    for (auto& c : coords_) c = c.in_field(Field::eisenstein);
  }
  if (kind_ == PointKind::projective2) {
    auto lead = std::find_if(coords_.begin(), coords_.end(),
                             [](const Scalar& s) { return !s.is_zero(); });
    if (lead == coords_.end()) throw UsageError("projective point with all coordinates zero");
    if (!lead->is_one()) {
      Scalar inv = lead->inverse();
      for (auto it = lead; it != coords_.end(); ++it) *it *= inv;
    }
  }
}

std::vector<Scalar> Point::homogeneous() const {
  std::vector<Scalar> h(coords_);
  if (kind_ != PointKind::projective2) {
    h.push_back(field_ == Field::eisenstein ? Scalar::eisenstein(1, 0) : Scalar(1));
  }
  return h;
}

std::string Point::to_string() const {
  std::string out = kind_ == PointKind::projective2 ? "[" : "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += kind_ == PointKind::projective2 ? ":" : ", ";
    out += coords_[i].to_string();
  }
  out += kind_ == PointKind::projective2 ? "]" : ")";
  return out;
}

std::size_t Point::hash() const {
  std::size_t seed = static_cast<std::size_t>(kind_);
  for (const auto& c : coords_) hash_combine(seed, c.hash());
  return seed;
}

Point affine(Scalar x, Scalar y) {
  return Point(PointKind::affine2, {std::move(x), std::move(y)});
}

Point affine(Scalar x, Scalar y, Scalar z) {
  return Point(PointKind::affine3, {std::move(x), std::move(y), std::move(z)});
}

Point projective(Scalar x, Scalar y, Scalar z) {
  return Point(PointKind::projective2, {std::move(x), std::move(y), std::move(z)});
}

void require_compatible(std::span<const Point* const> points) {
  if (points.empty()) return;
  const Point& first = *points.front();
  for (const Point* p : points.subspan(1)) {
    if (p->kind() != first.kind()) {
      throw UsageError("mixed point kinds: " + std::string(to_string(first.kind())) + " and " +
                       std::string(to_string(p->kind())));
    }
    if (p->field() != first.field()) {
      throw UsageError("mixed fields: " + std::string(to_string(first.field())) + " and " +
                       std::string(to_string(p->field())));
    }
  }
}

}  // namespace ordlines
