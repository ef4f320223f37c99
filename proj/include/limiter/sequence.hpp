#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "limiter/extended_real.hpp"

namespace limiter {

/// Integer-coefficient polynomial in n; coefficients()[i] multiplies n^i.
/// Trailing zero coefficients are always trimmed.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Integer> coeffs);

  /// The polynomial n.
  static Polynomial identity() { return Polynomial({Integer(0), Integer(1)}); }

  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Integer& leading() const { return coeffs_.back(); }

  Integer eval(const Integer& n) const;
  double eval(double n) const;

  /// Largest integer root, found by trying the divisors of the lowest
  /// nonzero coefficient. nullopt when there is no integer root.
  std::optional<Integer> largest_integer_root() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Integer> coeffs_;
};

struct ExprNode;

/// A concrete real sequence x_1, x_2, ... in the expression grammar. Values
/// are immutable and share their subtrees.
class SequenceExpr {
 public:
  explicit SequenceExpr(ExprNode node);

  const ExprNode& node() const noexcept { return *node_; }

  friend bool operator==(const SequenceExpr& a, const SequenceExpr& b);

 private:
  std::shared_ptr<const ExprNode> node_;
};

namespace expr {

/// x_n = value
struct Const {
  Rational value;
  friend bool operator==(const Const&, const Const&) = default;
};

/// x_n = a + b*n
struct Arith {
  Rational a;
  Rational b;
  friend bool operator==(const Arith&, const Arith&) = default;
};

/// x_n = a * r^n
struct Geom {
  Rational a;
  Rational r;
  friend bool operator==(const Geom&, const Geom&) = default;
};

/// x_n = p(n + shift) / q(n + shift); shift is max(0, largest integer root
/// of q) so every term is defined.
struct Ratio {
  Polynomial p;
  Polynomial q;
  Integer shift;
  friend bool operator==(const Ratio&, const Ratio&) = default;
};

/// x_n = scale * inner_n + offset
struct Affine {
  Rational scale;
  Rational offset;
  SequenceExpr inner;
  friend bool operator==(const Affine&, const Affine&) = default;
};

/// Round-robin merge: position (k-1)*m + j holds term k of child j.
struct Interleave {
  std::vector<SequenceExpr> children;
  friend bool operator==(const Interleave&, const Interleave&) = default;
};

/// x_n = inner_{n+skip}
struct Tail {
  std::uint64_t skip;
  SequenceExpr inner;
  friend bool operator==(const Tail&, const Tail&) = default;
};

/// x_n = lo + (hi - lo) * frac(n * golden ratio), dense in [lo, hi].
struct DenseOsc {
  Rational lo;
  Rational hi;
  friend bool operator==(const DenseOsc&, const DenseOsc&) = default;
};

/// 0, q_1, -q_1, q_2, -q_2, ... with q_k the Calkin-Wilf enumeration of the
/// positive rationals.
struct EnumRationals {
  friend bool operator==(const EnumRationals&, const EnumRationals&) = default;
};

}  // namespace expr

struct ExprNode {
  using Variant = std::variant<expr::Const, expr::Arith, expr::Geom, expr::Ratio, expr::Affine, expr::Interleave,
                               expr::Tail, expr::DenseOsc, expr::EnumRationals>;
  Variant value;
  friend bool operator==(const ExprNode&, const ExprNode&) = default;
};

inline bool operator==(const SequenceExpr& a, const SequenceExpr& b) {
  return a.node_ == b.node_ || *a.node_ == *b.node_;
}

// Validating constructors. They throw DomainError / ArityError on
// invariant violations.
SequenceExpr make_const(const Rational& c);
SequenceExpr make_arith(const Rational& a, const Rational& b);
SequenceExpr make_geom(const Rational& a, const Rational& r);
SequenceExpr make_ratio(Polynomial p, Polynomial q);
SequenceExpr make_affine(const Rational& scale, const Rational& offset, SequenceExpr inner);
SequenceExpr make_interleave(std::vector<SequenceExpr> children);
SequenceExpr make_tail(std::uint64_t skip, SequenceExpr inner);
SequenceExpr make_dense_osc(const Rational& lo, const Rational& hi);
SequenceExpr make_enum_rationals();

/// Stern's diatomic sequence: fusc(0)=0, fusc(1)=1, fusc(2k)=fusc(k),
/// fusc(2k+1)=fusc(k)+fusc(k+1).
Integer fusc(std::uint64_t k);

/// The k-th positive rational (k >= 1) of the Calkin-Wilf order,
/// fusc(k)/fusc(k+1).
Rational calkin_wilf(std::uint64_t k);

/// Constructor name of the root node ("const", "interleave", ...).
const char* constructor_name(const SequenceExpr& e);

/// Nesting depth; leaves have depth 1.
int depth(const SequenceExpr& e);

}  // namespace limiter
