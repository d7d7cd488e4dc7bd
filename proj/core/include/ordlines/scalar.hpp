#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ordlines {

using Integer = mpz_class;
using Rational = mpq_class;

/// Which field a scalar (and anything built from scalars) lives in.
enum class Field { rational, eisenstein };

std::string_view to_string(Field field);

/// An element a + b*w of Q(w), where w is a primitive cube root of unity
/// (w^2 = -w - 1).
///
/// Scalars tagged Field::rational always have b == 0. Arithmetic promotes to
/// the Eisenstein field whenever either operand is tagged with it. Equality
/// compares values only; the tag is carried so that points know which field
/// their set lives in. There is deliberately no ordering.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(Integer value) : a_(std::move(value)) {}  // NOLINT
  Scalar(Rational value) : a_(std::move(value)) { a_.canonicalize(); }  // NOLINT

  /// a + b*w, tagged as an Eisenstein-field element even when b == 0.
  static Scalar eisenstein(Rational a, Rational b);
  static Scalar omega();

  Field field() const noexcept { return field_; }
  const Rational& real_part() const noexcept { return a_; }
  const Rational& omega_part() const noexcept { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_one() const { return a_ == 1 && sgn(b_) == 0; }

  /// Throws DomainError for zero.
  Scalar inverse() const;

  /// Norm a^2 - ab + b^2 (equals a^2 for rationals).
  Rational norm() const;

  /// Same value re-tagged into `field`. Throws UsageError when a non-rational
  /// value is asked to become rational.
  Scalar in_field(Field field) const;

  /// "a", "a/b", or "a+b*w" / "a-b*w" for Eisenstein values with b != 0.
  std::string to_string() const;

  std::size_t hash() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar& lhs, const Scalar& rhs) {
    return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_;
  }

 private:
  Scalar(Field field, Rational a, Rational b)
      : field_(field), a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
  }

  Field field_ = Field::rational;
  Rational a_;
  Rational b_;
};

/// Parses "a" or "a/b" (b > 0). Returns false on malformed input or b == 0.
bool parse_rational(std::string_view text, Rational& out);

/// Parses a rational or, when `field` is Eisenstein, also "a+b*w", "a-b*w", "b*w".
bool parse_scalar(std::string_view text, Field field, Scalar& out);

std::size_t hash_integer(const Integer& value);
std::size_t hash_rational(const Rational& value);

inline void hash_combine(std::size_t& seed, std::size_t value) {
  seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace ordlines
