#include "limiter/hyperspace.hpp"

namespace limiter {

bool hyper_member(const HyperPoint& h, const HyperBasicOpen& v) { return closed_subset_of_open(h.set, v.generator); }

HyperPoint j_embed(const ExtendedReal& x) { return {ClusterSet::singleton(x)}; }

HyperPoint l_functional(const SequenceExpr& e) { return {cluster_set(e)}; }

HyperPoint universal_map(const LimiterPoint& p) { return {p.lambda()}; }

HyperPoint universal_map_via_witness(const LimiterPoint& p) { return l_functional(p.witness()); }

OpenSet j_preimage(const HyperBasicOpen& v) {
  return reconstruct_open(finite_breakpoints(v.generator),
                          [&](const ExtendedReal& x) { return hyper_member(j_embed(x), v); });
}

BasicOpen preimage_basic(const HyperBasicOpen& v) { return {j_preimage(v)}; }

}  // namespace limiter
