#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "limiter/interval_set.hpp"
#include "limiter/sequence.hpp"

namespace limiter {

// Brute-force cluster-set estimation from a finite prefix. It never looks at
// the symbolic rules; it only evaluates terms in double precision and groups
// them in the compactified coordinate h(t) = t / (1 + |t|).

struct OracleConfig {
  std::uint64_t prefix_length = 100'000;
  double burn_in_fraction = 0.5;
  double gap_threshold = 0.001;
  double infinity_threshold = 1e9;

  /// Throws DomainError unless prefix_length >= 100, gap and infinity
  /// thresholds are positive and the burn-in fraction lies in [0, 1).
  void validate() const;

  /// Defaults overridden by ORACLE_N, ORACLE_DELTA and ORACLE_M when set.
  static OracleConfig from_environment();
};

/// A closed interval on the compactified line [-1, 1].
using UnitInterval = std::pair<double, double>;

struct ClusterEstimate {
  std::vector<UnitInterval> intervals;  // sorted, disjoint
  std::string mapped_back;              // approximate closed-set literal
  std::uint64_t sample_count = 0;
};

/// h for doubles; |x| > infinity_threshold snaps to +-1.
double compactify_double(double x, double infinity_threshold);
/// Inverse of h; +-1 maps back to +-inf.
double decompactify(double u);

/// Burn-in, compactify, sort, then group values whose gap is at most the
/// threshold. Groups within one threshold of +-1 collapse to the infinity.
ClusterEstimate estimate_cluster(const SequenceExpr& e, const OracleConfig& cfg = {});

/// h-image of an exact closed set.
std::vector<UnitInterval> compactified_intervals(const ClusterSet& c);

/// Hausdorff distance between two nonempty finite unions of closed
/// intervals of the real line.
double hausdorff_intervals(const std::vector<UnitInterval>& a, const std::vector<UnitInterval>& b);

double hausdorff_compactified(const ClusterEstimate& a, const ClusterSet& b);

nlohmann::json to_json(const ClusterEstimate& est);

}  // namespace limiter
