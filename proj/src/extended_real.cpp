#include "limiter/extended_real.hpp"

#include <cctype>
#include <cmath>

#include "limiter/errors.hpp"

namespace limiter {

SyntaxError::SyntaxError(std::string message, std::size_t line, std::size_t column,
                         std::set<std::string> expected)
    : LimiterError(std::move(message)), line_(line), column_(column), expected_(std::move(expected)) {}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad_number(std::string_view text) {
  throw SyntaxError("malformed number '" + std::string(text) + "'", 1, 1, {"number"});
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.empty()) bad_number(text);

  Rational result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_number(text);
    Integer d(std::string(den), 10);
    if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    result = Rational(Integer(std::string(num), 10), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) bad_number(text);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    result = Rational(Integer(std::string(whole) + std::string(frac), 10), scale);
  } else {
    if (!all_digits(body)) bad_number(text);
    result = Rational(Integer(std::string(body), 10));
  }
  result.canonicalize();
  return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

int sign(const Rational& q) { return sgn(q); }

int ExtendedReal::sign() const {
  switch (kind_) {
    case Kind::NegInfinity: return -1;
    case Kind::PosInfinity: return 1;
    case Kind::Finite: return sgn(value_);
  }
  return 0;
}

ExtendedReal ExtendedReal::negated() const {
  switch (kind_) {
    case Kind::NegInfinity: return pos_infinity();
    case Kind::PosInfinity: return neg_infinity();
    case Kind::Finite: return ExtendedReal(Rational(-value_));
  }
  return *this;
}

ExtendedReal ExtendedReal::affine(const Rational& s, const Rational& t) const {
  if (is_finite()) return ExtendedReal(Rational(s * value_ + t));
  return infinity(sgn(s) * sign());
}

std::strong_ordering operator<=>(const ExtendedReal& a, const ExtendedReal& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  if (!a.is_finite()) return std::strong_ordering::equal;
  const int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

ExtendedReal parse_extended_real(std::string_view text) {
  if (text == "-inf" || text == "-∞") return ExtendedReal::neg_infinity();
  if (text == "+inf" || text == "inf" || text == "+∞" || text == "∞") return ExtendedReal::pos_infinity();
  return ExtendedReal(parse_rational(text));
}

std::string to_string(const ExtendedReal& x) {
  switch (x.kind()) {
    case ExtendedReal::Kind::NegInfinity: return "-inf";
    case ExtendedReal::Kind::PosInfinity: return "+inf";
    case ExtendedReal::Kind::Finite: return to_string(x.value());
  }
  return {};
}

std::ostream& operator<<(std::ostream& os, const ExtendedReal& x) { return os << to_string(x); }

Rational compactify(const ExtendedReal& x) {
  if (x.is_pos_infinity()) return Rational(1);
  if (x.is_neg_infinity()) return Rational(-1);
  Rational r = x.value() / (1 + abs(x.value()));
  r.canonicalize();
  return r;
}

Rational compactify_metric(const ExtendedReal& x, const ExtendedReal& y) {
  Rational d = abs(compactify(x) - compactify(y));
  d.canonicalize();
  return d;
}

double to_double(const Rational& q) { return q.get_d(); }

double to_double(const ExtendedReal& x) {
  if (x.is_pos_infinity()) return HUGE_VAL;
  if (x.is_neg_infinity()) return -HUGE_VAL;
  return x.value().get_d();
}

}  // namespace limiter
