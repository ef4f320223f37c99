#pragma once

// Shared helpers for the unit tests: a reference evaluator written
// independently of the library's, and a random AST generator.

#include <optional>
#include <random>
#include <vector>

#include "limiter/extended_real.hpp"
#include "limiter/interval_set.hpp"
#include "limiter/sequence.hpp"

namespace testing_support {

using limiter::ExtendedReal;
using limiter::Integer;
using limiter::Rational;
using limiter::SequenceExpr;

inline Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline ExtendedReal X(long num, long den = 1) { return ExtendedReal(q(num, den)); }
inline ExtendedReal pinf() { return ExtendedReal::pos_infinity(); }
inline ExtendedReal ninf() { return ExtendedReal::neg_infinity(); }

// Stern's sequence by the bit-walk (a, b) recurrence rather than recursion.
inline Integer ref_fusc(std::uint64_t k) {
  Integer a = 1, b = 0;
  while (k > 0) {
    if (k & 1) b += a;
    else a += b;
    k >>= 1;
  }
  return b;
}

inline Rational ref_poly(const limiter::Polynomial& p, const Integer& n) {
  Integer acc = 0;
  const auto& c = p.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * n + c[i];
  return Rational(acc);
}

/// Exact term n; nullopt when a denseosc leaf is involved.
inline std::optional<Rational> ref_term(const SequenceExpr& e, std::uint64_t n) {
  namespace ex = limiter::expr;
  const auto& v = e.node().value;
  if (auto* c = std::get_if<ex::Const>(&v)) return c->value;
  if (auto* a = std::get_if<ex::Arith>(&v)) return Rational(a->a + a->b * Rational(Integer(static_cast<unsigned long>(n))));
  if (auto* g = std::get_if<ex::Geom>(&v)) {
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), g->r.get_num().get_mpz_t(), n);
    mpz_pow_ui(den.get_mpz_t(), g->r.get_den().get_mpz_t(), n);
    Rational r(num, den);
    r.canonicalize();
    return Rational(g->a * r);
  }
  if (auto* r = std::get_if<ex::Ratio>(&v)) {
    const Integer m = Integer(static_cast<unsigned long>(n)) + r->shift;
    Rational out = ref_poly(r->p, m) / ref_poly(r->q, m);
    out.canonicalize();
    return out;
  }
  if (auto* a = std::get_if<ex::Affine>(&v)) {
    auto inner = ref_term(a->inner, n);
    if (!inner) return std::nullopt;
    return Rational(a->scale * *inner + a->offset);
  }
  if (auto* il = std::get_if<ex::Interleave>(&v)) {
    const std::uint64_t m = il->children.size();
    return ref_term(il->children[(n - 1) % m], (n - 1) / m + 1);
  }
  if (auto* t = std::get_if<ex::Tail>(&v)) return ref_term(t->inner, n + t->skip);
  if (std::holds_alternative<ex::DenseOsc>(v)) return std::nullopt;
  // 0, then +q_1, -q_1, +q_2, -q_2, ... over the Calkin-Wilf order.
  if (n == 1) return Rational(0);
  const std::uint64_t k = n / 2;
  Rational cw(ref_fusc(k), ref_fusc(k + 1));
  cw.canonicalize();
  return n % 2 == 0 ? cw : Rational(-cw);
}

/// Random ASTs over the whole grammar with small parameters.
class ExprGen {
 public:
  explicit ExprGen(std::uint64_t seed) : rng_(seed) {}

  Rational small() {
    static const long dens[] = {1, 2, 3, 4};
    return q(pick(-6, 6), dens[pick(0, 3)]);
  }

  SequenceExpr leaf() {
    switch (pick(0, 7)) {
      case 0: return limiter::make_const(small());
      case 1: return limiter::make_arith(small(), small());
      case 2: {
        static const Rational ratios[] = {q(1, 2), q(-1, 2), q(1), q(-1), q(2), q(-3, 2), q(1, 3), q(0)};
        return limiter::make_geom(small(), ratios[pick(0, 7)]);
      }
      case 3: return limiter::make_ratio(poly(), nonzero_poly());
      case 4: {
        Rational a = small(), b = small();
        if (b < a) std::swap(a, b);
        return limiter::make_dense_osc(a, b);
      }
      case 5: return limiter::make_enum_rationals();
      default: return limiter::make_const(small());
    }
  }

  SequenceExpr expr(int depth) {
    if (depth <= 1 || pick(0, 2) == 0) return leaf();
    switch (pick(0, 2)) {
      case 0: {
        Rational s = small();
        return limiter::make_affine(s, small(), expr(depth - 1));
      }
      case 1: return limiter::make_tail(static_cast<std::uint64_t>(pick(0, 9)), expr(depth - 1));
      default: {
        std::vector<SequenceExpr> kids;
        const long m = pick(2, 3);
        for (long i = 0; i < m; ++i) kids.push_back(expr(depth - 1));
        return limiter::make_interleave(std::move(kids));
      }
    }
  }

  long pick(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  std::mt19937_64& rng() { return rng_; }

 private:
  limiter::Polynomial poly() {
    std::vector<Integer> c;
    const long deg = pick(0, 3);
    for (long i = 0; i <= deg; ++i) c.emplace_back(pick(-4, 4));
    return limiter::Polynomial(std::move(c));
  }
  limiter::Polynomial nonzero_poly() {
    for (;;) {
      auto p = poly();
      if (!p.is_zero()) return p;
    }
  }

  std::mt19937_64 rng_;
};

/// Rational probes around every breakpoint plus both infinities.
inline std::vector<ExtendedReal> probes_around(const std::vector<Rational>& cuts) {
  std::vector<ExtendedReal> out = {ninf(), pinf(), X(0), X(1000), X(-1000)};
  for (const auto& c : cuts) {
    for (const Rational& d : {q(0), q(1, 1000), q(-1, 1000), q(1, 3), q(-1, 3)}) out.emplace_back(Rational(c + d));
  }
  return out;
}

}  // namespace testing_support
