#include "limiter/eval.hpp"

#include <cmath>

#include "limiter/errors.hpp"

namespace limiter {

namespace {

constexpr long double kGolden = 1.6180339887498948482045868343656381L;

std::uint64_t fusc_u64(std::uint64_t k) {
  std::uint64_t a = 0;
  std::uint64_t b = 1;
  for (int bit = 63; bit >= 0; --bit) {
    if ((k >> bit) & 1U) a += b;
    else b += a;
  }
  return a;
}

Rational power(const Rational& r, std::uint64_t n) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), r.get_num_mpz_t(), n);
  mpz_pow_ui(den.get_mpz_t(), r.get_den_mpz_t(), n);
  Rational out(num, den);
  out.canonicalize();
  return out;
}

// Position n of an m-way interleave -> (child index, child term index).
std::pair<std::size_t, std::uint64_t> interleave_slot(std::uint64_t n, std::size_t m) {
  return {static_cast<std::size_t>((n - 1) % m), (n - 1) / m + 1};
}

}  // namespace

double golden_fraction(std::uint64_t n) {
  long double x = static_cast<long double>(n) * kGolden;
  return static_cast<double>(x - std::floor(x));
}

TermValue eval_term(const SequenceExpr& e, std::uint64_t n) {
  if (n < 1) throw IndexError("sequence indices start at 1");
  return std::visit(
      [n](const auto& node) -> TermValue {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, expr::Const>) {
          return node.value;
        } else if constexpr (std::is_same_v<T, expr::Arith>) {
          Rational v = node.a + node.b * Rational(Integer(static_cast<unsigned long>(n)));
          v.canonicalize();
          return v;
        } else if constexpr (std::is_same_v<T, expr::Geom>) {
          if (node.a == 0) return Rational(0);
          Rational v = node.a * power(node.r, n);
          v.canonicalize();
          return v;
        } else if constexpr (std::is_same_v<T, expr::Ratio>) {
          Integer m = Integer(static_cast<unsigned long>(n)) + node.shift;
          Rational v(node.p.eval(m), node.q.eval(m));
          v.canonicalize();
          return v;
        } else if constexpr (std::is_same_v<T, expr::Affine>) {
          if (node.scale == 0) return node.offset;
          TermValue inner = eval_term(node.inner, n);
          if (auto* q = std::get_if<Rational>(&inner)) {
            Rational v = node.scale * *q + node.offset;
            v.canonicalize();
            return v;
          }
          return node.scale.get_d() * std::get<double>(inner) + node.offset.get_d();
        } else if constexpr (std::is_same_v<T, expr::Interleave>) {
          auto [child, k] = interleave_slot(n, node.children.size());
          return eval_term(node.children[child], k);
        } else if constexpr (std::is_same_v<T, expr::Tail>) {
          return eval_term(node.inner, n + node.skip);
        } else if constexpr (std::is_same_v<T, expr::DenseOsc>) {
          if (node.lo == node.hi) return node.lo;
          return node.lo.get_d() + Rational(node.hi - node.lo).get_d() * golden_fraction(n);
        } else {
          if (n == 1) return Rational(0);
          Rational q = calkin_wilf(n / 2);
          if (n % 2 == 1) q = -q;
          return q;
        }
      },
      e.node().value);
}

double eval_double(const SequenceExpr& e, std::uint64_t n) {
  return std::visit(
      [n](const auto& node) -> double {
        using T = std::decay_t<decltype(node)>;
        const double dn = static_cast<double>(n);
        if constexpr (std::is_same_v<T, expr::Const>) {
          return node.value.get_d();
        } else if constexpr (std::is_same_v<T, expr::Arith>) {
          return node.a.get_d() + node.b.get_d() * dn;
        } else if constexpr (std::is_same_v<T, expr::Geom>) {
          if (node.a == 0) return 0.0;
          return node.a.get_d() * std::pow(node.r.get_d(), dn);
        } else if constexpr (std::is_same_v<T, expr::Ratio>) {
          const double m = dn + node.shift.get_d();
          return node.p.eval(m) / node.q.eval(m);
        } else if constexpr (std::is_same_v<T, expr::Affine>) {
          if (node.scale == 0) return node.offset.get_d();
          return node.scale.get_d() * eval_double(node.inner, n) + node.offset.get_d();
        } else if constexpr (std::is_same_v<T, expr::Interleave>) {
          auto [child, k] = interleave_slot(n, node.children.size());
          return eval_double(node.children[child], k);
        } else if constexpr (std::is_same_v<T, expr::Tail>) {
          return eval_double(node.inner, n + node.skip);
        } else if constexpr (std::is_same_v<T, expr::DenseOsc>) {
          return node.lo.get_d() + Rational(node.hi - node.lo).get_d() * golden_fraction(n);
        } else {
          if (n == 1) return 0.0;
          const std::uint64_t k = n / 2;
          const double q = static_cast<double>(fusc_u64(k)) / static_cast<double>(fusc_u64(k + 1));
          return n % 2 == 1 ? -q : q;
        }
      },
      e.node().value);
}

ExtendedReal to_extended(const TermValue& v) {
  if (const auto* q = std::get_if<Rational>(&v)) return ExtendedReal(*q);
  const double d = std::get<double>(v);
  if (std::isinf(d)) return ExtendedReal::infinity(d > 0 ? 1 : -1);
  return ExtendedReal(Rational(d));
}

double to_double(const TermValue& v) {
  if (const auto* q = std::get_if<Rational>(&v)) return q->get_d();
  return std::get<double>(v);
}

bool term_in_open(const TermValue& v, const OpenSet& o) { return o.contains(to_extended(v)); }

}  // namespace limiter
