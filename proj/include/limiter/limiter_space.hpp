#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "limiter/cluster.hpp"

namespace limiter {

/// A point of the space of sequences modulo similarity. The cluster set is
/// the class invariant; the witness is one representative and never takes
/// part in equality.
class LimiterPoint {
 public:
  /// The class of e.
  explicit LimiterPoint(SequenceExpr witness);

  const ClusterSet& lambda() const noexcept { return lambda_; }
  const SequenceExpr& witness() const noexcept { return witness_; }

  friend bool operator==(const LimiterPoint& a, const LimiterPoint& b) { return a.lambda_ == b.lambda_; }

 private:
  ClusterSet lambda_;
  SequenceExpr witness_;
};

/// O* for an open O of the extended line: the points whose cluster set lies
/// inside O.
struct BasicOpen {
  OpenSet generator;
  friend bool operator==(const BasicOpen&, const BasicOpen&) = default;
};

/// A finite union of basic opens.
struct LimiterOpen {
  std::vector<BasicOpen> basics;
};

/// The limit functional: total on every expression.
LimiterPoint limit_of(const SequenceExpr& e);

/// Same cluster set.
bool similar(const SequenceExpr& e1, const SequenceExpr& e2);

/// The embedding of the extended line: a finite c goes to the class of the
/// constant sequence, +inf to the class of (n), -inf to the class of (-n).
LimiterPoint include(const ExtendedReal& x);

/// The extended real x with include(x) == p, when there is one.
std::optional<ExtendedReal> classical_value(const LimiterPoint& p);

bool member_basic(const LimiterPoint& p, const BasicOpen& b);
bool member_open(const LimiterPoint& p, const LimiterOpen& o);

/// (g1 ∩ g2)*; membership equals membership in both.
BasicOpen intersect_basics(const BasicOpen& b1, const BasicOpen& b2);

/// The first basic of o (in list order) containing p. For every expression
/// y, limit_of(y) lies in the result exactly when cluster_set(y) lies in its
/// generator. Throws NotMember when p is outside o.
BasicOpen axiom5_witness(const LimiterPoint& p, const LimiterOpen& o);

/// p.lambda ⊆ q.lambda: every basic open containing q also contains p.
bool specialization_leq(const LimiterPoint& p, const LimiterPoint& q);

/// {x : include(x) ∈ b}, rebuilt as an open set from membership queries
/// alone. The only places membership can change are the endpoints of the
/// generator, so probing each endpoint and one point of every gap between
/// them recovers the set.
OpenSet inclusion_preimage(const BasicOpen& b);

nlohmann::json to_json(const LimiterPoint& p);
nlohmann::json to_json(const LimiterOpen& o);
/// Reads back the {lambda, witness, classical} document; the stored lambda
/// must agree with the witness.
LimiterPoint limiter_point_from_json(const nlohmann::json& j);

}  // namespace limiter
