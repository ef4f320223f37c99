#pragma once

#include "limiter/limiter_space.hpp"

namespace limiter {

// A second model of the limiter axioms whose points are the nonempty closed
// sets themselves. It exists to give the universal map a target that is
// structurally different from the quotient construction.

struct HyperPoint {
  ClusterSet set;
  friend bool operator==(const HyperPoint&, const HyperPoint&) = default;
};

/// {h : h.set ⊆ generator}
struct HyperBasicOpen {
  OpenSet generator;
  friend bool operator==(const HyperBasicOpen&, const HyperBasicOpen&) = default;
};

bool hyper_member(const HyperPoint& h, const HyperBasicOpen& v);

HyperPoint j_embed(const ExtendedReal& x);
HyperPoint l_functional(const SequenceExpr& e);

/// T([x_n]) = L(x_n), read off the stored cluster set.
HyperPoint universal_map(const LimiterPoint& p);

/// The same map computed through the witness: L applied to the
/// representative. Agreement with universal_map is the uniqueness check.
HyperPoint universal_map_via_witness(const LimiterPoint& p);

/// j^{-1}(V) for a hyper basic open, rebuilt from membership of j(x).
OpenSet j_preimage(const HyperBasicOpen& v);

/// T^{-1}(V) as the basic open (j^{-1}(V))*.
BasicOpen preimage_basic(const HyperBasicOpen& v);

}  // namespace limiter
