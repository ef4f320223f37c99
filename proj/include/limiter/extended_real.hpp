#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace limiter {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "-3", "2.125" into a canonical rational.
/// Throws SyntaxError on malformed text and DomainError on a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text: "3", "-1/2".
std::string to_string(const Rational& q);

int sign(const Rational& q);

/// A point of the extended real line: an exact rational or one of the two
/// infinities.
class ExtendedReal {
 public:
  enum class Kind { NegInfinity, Finite, PosInfinity };

  ExtendedReal() : kind_(Kind::Finite), value_(0) {}
  ExtendedReal(const Rational& q) : kind_(Kind::Finite), value_(q) { value_.canonicalize(); }
  ExtendedReal(long v) : kind_(Kind::Finite), value_(v) {}
  ExtendedReal(int v) : kind_(Kind::Finite), value_(v) {}

  static ExtendedReal pos_infinity() { return ExtendedReal(Kind::PosInfinity); }
  static ExtendedReal neg_infinity() { return ExtendedReal(Kind::NegInfinity); }
  static ExtendedReal infinity(int sign) { return sign < 0 ? neg_infinity() : pos_infinity(); }

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  bool is_pos_infinity() const noexcept { return kind_ == Kind::PosInfinity; }
  bool is_neg_infinity() const noexcept { return kind_ == Kind::NegInfinity; }

  /// Only meaningful when is_finite().
  const Rational& value() const noexcept { return value_; }

  /// -1, 0 or 1; infinities carry their sign.
  int sign() const;

  ExtendedReal negated() const;

  /// s*x + t with s != 0; infinities map to the infinity of sign(s)*sign(x).
  ExtendedReal affine(const Rational& s, const Rational& t) const;

  friend std::strong_ordering operator<=>(const ExtendedReal& a, const ExtendedReal& b);
  friend bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  explicit ExtendedReal(Kind k) : kind_(k), value_(0) {}

  Kind kind_;
  Rational value_;
};

/// Accepts a rational literal or "-inf", "+inf", "inf", "-∞", "+∞", "∞".
ExtendedReal parse_extended_real(std::string_view text);
std::string to_string(const ExtendedReal& x);
std::ostream& operator<<(std::ostream& os, const ExtendedReal& x);

/// The order-preserving map of the extended line onto [-1, 1]:
/// h(t) = t / (1 + |t|), h(±inf) = ±1.
Rational compactify(const ExtendedReal& x);

/// |h(x) - h(y)|, a metric inducing the order topology.
Rational compactify_metric(const ExtendedReal& x, const ExtendedReal& y);

double to_double(const Rational& q);
double to_double(const ExtendedReal& x);

}  // namespace limiter
