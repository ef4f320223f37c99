#include "limiter/limiter_space.hpp"

#include <algorithm>

#include "limiter/errors.hpp"
#include "limiter/literal.hpp"
#include "limiter/sequence_parser.hpp"

namespace limiter {

LimiterPoint::LimiterPoint(SequenceExpr witness) : lambda_(cluster_set(witness)), witness_(std::move(witness)) {}

LimiterPoint limit_of(const SequenceExpr& e) { return LimiterPoint(e); }

bool similar(const SequenceExpr& e1, const SequenceExpr& e2) { return cluster_set(e1) == cluster_set(e2); }

LimiterPoint include(const ExtendedReal& x) {
  if (x.is_pos_infinity()) return limit_of(make_arith(0, 1));
  if (x.is_neg_infinity()) return limit_of(make_arith(0, -1));
  return limit_of(make_const(x.value()));
}

std::optional<ExtendedReal> classical_value(const LimiterPoint& p) { return p.lambda().singleton_value(); }

bool member_basic(const LimiterPoint& p, const BasicOpen& b) { return closed_subset_of_open(p.lambda(), b.generator); }

bool member_open(const LimiterPoint& p, const LimiterOpen& o) {
  return std::any_of(o.basics.begin(), o.basics.end(), [&](const BasicOpen& b) { return member_basic(p, b); });
}

BasicOpen intersect_basics(const BasicOpen& b1, const BasicOpen& b2) {
  return {intersect_open(b1.generator, b2.generator)};
}

BasicOpen axiom5_witness(const LimiterPoint& p, const LimiterOpen& o) {
  for (const auto& b : o.basics) {
    if (member_basic(p, b)) return b;
  }
  throw NotMember("point with cluster set " + to_string(p.lambda()) + " lies in none of the " +
                  std::to_string(o.basics.size()) + " basic open(s)");
}

bool specialization_leq(const LimiterPoint& p, const LimiterPoint& q) { return p.lambda().subset_of(q.lambda()); }

OpenSet inclusion_preimage(const BasicOpen& b) {
  return reconstruct_open(finite_breakpoints(b.generator),
                          [&](const ExtendedReal& x) { return member_basic(include(x), b); });
}

nlohmann::json to_json(const LimiterPoint& p) {
  nlohmann::json j{{"lambda", to_string(p.lambda())}, {"witness", print_expr(p.witness())}};
  if (auto x = classical_value(p)) {
    j["classical"] = to_string(*x);
  } else {
    j["classical"] = nullptr;
  }
  return j;
}

nlohmann::json to_json(const LimiterOpen& o) {
  auto arr = nlohmann::json::array();
  for (const auto& b : o.basics) arr.push_back(to_string(b.generator));
  return arr;
}

LimiterPoint limiter_point_from_json(const nlohmann::json& j) {
  LimiterPoint p(parse_expr(j.at("witness").get<std::string>()));
  if (p.lambda() != parse_closed_set(j.at("lambda").get<std::string>())) {
    throw DomainError("stored lambda disagrees with the witness expression");
  }
  return p;
}

}  // namespace limiter
