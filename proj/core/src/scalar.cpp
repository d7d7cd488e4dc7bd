#include "ordlines/scalar.hpp"

#include <cctype>
#include <functional>

#include "ordlines/error.hpp"

namespace ordlines {

std::string_view to_string(Field field) {
  return field == Field::rational ? "Q" : "Qw";
}

Scalar Scalar::eisenstein(Rational a, Rational b) {
  return Scalar(Field::eisenstein, std::move(a), std::move(b));
}

Scalar Scalar::omega() { return eisenstein(0, 1); }

Rational Scalar::norm() const { return Rational(a_ * a_ - a_ * b_ + b_ * b_); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  if (field_ == Field::rational) return Scalar(Rational(1 / a_));
  // (a + bw)(a - b - bw) = a^2 - ab + b^2
  Rational n = norm();
  return Scalar(Field::eisenstein, Rational((a_ - b_) / n), Rational(-b_ / n));
}

Scalar Scalar::in_field(Field field) const {
  if (field == Field::rational && sgn(b_) != 0) {
    throw UsageError("scalar " + to_string() + " is not rational");
  }
  return Scalar(field, a_, b_);
}

std::string Scalar::to_string() const {
  std::string out = a_.get_str();
  if (sgn(b_) == 0) return out;
  if (sgn(b_) > 0) {
    out += '+';
    out += b_.get_str();
  } else {
    out += '-';
    out += Rational(-b_).get_str();
  }
  out += "*w";
  return out;
}

std::size_t Scalar::hash() const {
  std::size_t seed = hash_rational(a_);
  hash_combine(seed, hash_rational(b_));
  return seed;
}

Scalar Scalar::operator-() const { return Scalar(field_, -a_, -b_); }

Scalar& Scalar::operator+=(const Scalar& rhs) {
  a_ += rhs.a_;
  b_ += rhs.b_;
  if (rhs.field_ == Field::eisenstein) field_ = Field::eisenstein;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  if (rhs.field_ == Field::eisenstein) field_ = Field::eisenstein;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (rhs.field_ == Field::eisenstein) field_ = Field::eisenstein;
  if (sgn(b_) == 0 && sgn(rhs.b_) == 0) {
    a_ *= rhs.a_;
    return *this;
  }
  // (a + bw)(c + dw) = (ac - bd) + (ad + bc - bd)w
  Rational bd = b_ * rhs.b_;
  Rational a = a_ * rhs.a_ - bd;
  Rational b = a_ * rhs.b_ + b_ * rhs.a_ - bd;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  if (sgn(b_) == 0 && sgn(rhs.b_) == 0) {
    a_ /= rhs.a_;
    if (rhs.field_ == Field::eisenstein) field_ = Field::eisenstein;
    return *this;
  }
  return *this *= rhs.inverse();
}

namespace {

bool parse_integer(std::string_view text, Integer& out, bool allow_sign) {
  std::size_t i = 0;
  if (allow_sign && !text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) return false;
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) return false;
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

}  // namespace

bool parse_rational(std::string_view text, Rational& out) {
  auto slash = text.find('/');
  Integer num;
  Integer den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num, true)) return false;
  } else {
    if (!parse_integer(text.substr(0, slash), num, true)) return false;
    if (!parse_integer(text.substr(slash + 1), den, false)) return false;
    if (sgn(den) == 0) return false;
  }
  out = Rational(num, den);
  out.canonicalize();
  return true;
}

bool parse_scalar(std::string_view text, Field field, Scalar& out) {
  constexpr std::string_view suffix = "*w";
  bool has_omega = text.size() >= suffix.size() &&
                   text.substr(text.size() - suffix.size()) == suffix;
  if (!has_omega) {
    Rational value;
    if (!parse_rational(text, value)) return false;
    out = field == Field::rational ? Scalar(value) : Scalar::eisenstein(value, 0);
    return true;
  }
  if (field != Field::eisenstein) return false;

  std::string_view body = text.substr(0, text.size() - suffix.size());
  // Split at the last sign that directly follows a digit: "1/2-3", "1+-3", "-1-2".
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') &&
        std::isdigit(static_cast<unsigned char>(body[i - 1]))) {
      split = i;
      break;
    }
  }
  Rational a;
  Rational b;
  if (split == std::string_view::npos) {
    if (!parse_rational(body, b)) return false;
  } else {
    if (!parse_rational(body.substr(0, split), a)) return false;
    std::string_view tail = body.substr(split + 1);
    if (tail.empty() || tail[0] == '+') return false;
    if (!parse_rational(tail, b)) return false;
    if (body[split] == '-') b = -b;
  }
  out = Scalar::eisenstein(a, b);
  return true;
}

std::size_t hash_integer(const Integer& value) {
  mpz_srcptr raw = value.get_mpz_t();
  std::size_t seed = static_cast<std::size_t>(mpz_sgn(raw) + 1);
  const std::size_t limbs = mpz_size(raw);
  for (std::size_t i = 0; i < limbs; ++i) {
    hash_combine(seed, std::hash<mp_limb_t>{}(mpz_getlimbn(raw, static_cast<mp_size_t>(i))));
  }
  return seed;
}

std::size_t hash_rational(const Rational& value) {
  std::size_t seed = hash_integer(value.get_num());
  hash_combine(seed, hash_integer(value.get_den()));
  return seed;
}

}  // namespace ordlines
