#include "limiter/sequence.hpp"

#include <algorithm>

#include "limiter/errors.hpp"

namespace limiter {

Polynomial::Polynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer Polynomial::eval(const Integer& n) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * n + *it;
  return acc;
}

double Polynomial::eval(double n) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * n + it->get_d();
  return acc;
}

std::optional<Integer> Polynomial::largest_integer_root() const {
  if (is_zero()) return std::nullopt;
  std::optional<Integer> best;
  // A zero constant term means 0 is a root; the remaining integer roots
  // divide the lowest nonzero coefficient.
  std::size_t low = 0;
  while (coeffs_[low] == 0) ++low;
  if (low > 0) best = Integer(0);
  Integer c = abs(coeffs_[low]);
  if (c == 0 || degree() == static_cast<int>(low)) return best;
  auto consider = [&](const Integer& cand) {
    if (eval(cand) == 0 && (!best || *best < cand)) best = cand;
  };
  for (Integer d = 1; d * d <= c; ++d) {
    if (c % d != 0) continue;
    Integer other = c / d;
    consider(d);
    consider(Integer(-d));
    consider(other);
    consider(Integer(-other));
  }
  return best;
}

SequenceExpr::SequenceExpr(ExprNode node) : node_(std::make_shared<const ExprNode>(std::move(node))) {}

SequenceExpr make_const(const Rational& c) { return SequenceExpr({expr::Const{c}}); }

SequenceExpr make_arith(const Rational& a, const Rational& b) { return SequenceExpr({expr::Arith{a, b}}); }

SequenceExpr make_geom(const Rational& a, const Rational& r) { return SequenceExpr({expr::Geom{a, r}}); }

SequenceExpr make_ratio(Polynomial p, Polynomial q) {
  if (q.is_zero()) throw DomainError("ratio denominator is the zero polynomial");
  Integer shift = 0;
  if (auto root = q.largest_integer_root(); root && *root > 0) shift = *root;
  return SequenceExpr({expr::Ratio{std::move(p), std::move(q), shift}});
}

SequenceExpr make_affine(const Rational& scale, const Rational& offset, SequenceExpr inner) {
  return SequenceExpr({expr::Affine{scale, offset, std::move(inner)}});
}

SequenceExpr make_interleave(std::vector<SequenceExpr> children) {
  if (children.size() < 2) throw ArityError("interleave needs at least 2 children, got " + std::to_string(children.size()));
  return SequenceExpr({expr::Interleave{std::move(children)}});
}

SequenceExpr make_tail(std::uint64_t skip, SequenceExpr inner) {
  return SequenceExpr({expr::Tail{skip, std::move(inner)}});
}

SequenceExpr make_dense_osc(const Rational& lo, const Rational& hi) {
  if (hi < lo) throw DomainError("denseosc needs lo <= hi, got " + to_string(lo) + " > " + to_string(hi));
  return SequenceExpr({expr::DenseOsc{lo, hi}});
}

SequenceExpr make_enum_rationals() { return SequenceExpr({expr::EnumRationals{}}); }

Integer fusc(std::uint64_t k) {
  // Track (fusc(m), fusc(m+1)) while reading k's bits from the top.
  Integer a = 0;  // fusc(m)
  Integer b = 1;  // fusc(m+1)
  for (int bit = 63; bit >= 0; --bit) {
    if ((k >> bit) & 1U) {
      a = a + b;  // m -> 2m+1
    } else {
      b = a + b;  // m -> 2m
    }
  }
  return a;
}

Rational calkin_wilf(std::uint64_t k) {
  if (k == 0) throw IndexError("Calkin-Wilf index starts at 1");
  Rational q(fusc(k), fusc(k + 1));
  q.canonicalize();
  return q;
}

const char* constructor_name(const SequenceExpr& e) {
  static constexpr const char* names[] = {"const", "arith", "geom", "ratio", "affine",
                                          "interleave", "tail", "denseosc", "enumrationals"};
  return names[e.node().value.index()];
}

int depth(const SequenceExpr& e) {
  return std::visit(
      [](const auto& n) -> int {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, expr::Affine> || std::is_same_v<T, expr::Tail>) {
          return 1 + depth(n.inner);
        } else if constexpr (std::is_same_v<T, expr::Interleave>) {
          int d = 0;
          for (const auto& c : n.children) d = std::max(d, depth(c));
          return 1 + d;
        } else {
          return 1;
        }
      },
      e.node().value);
}

}  // namespace limiter
