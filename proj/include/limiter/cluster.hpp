#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <json.hpp>

#include "limiter/interval_set.hpp"
#include "limiter/sequence.hpp"

namespace limiter {

/// The exact set of cluster points of e in the extended line, computed by
/// structural recursion over the expression.
ClusterSet cluster_set(const SequenceExpr& e);

struct ConvergentTo {
  ExtendedReal limit;
  friend bool operator==(const ConvergentTo&, const ConvergentTo&) = default;
};

struct Oscillating {
  ClusterSet lambda;
  friend bool operator==(const Oscillating&, const Oscillating&) = default;
};

/// ConvergentTo exactly when the cluster set is a single point.
using ConvergenceClass = std::variant<ConvergentTo, Oscillating>;

ConvergenceClass convergence_class(const SequenceExpr& e);

struct CertifyConfig {
  std::uint64_t scan_bound = 1'000'000;
  std::uint64_t horizon = 1000;
};

/// Witness that the tail of an expression from start_index on lies in an open
/// set. Terms start_index .. start_index + horizon were evaluated exactly and
/// checked; `justification` names the constructor argument that extends the
/// claim past the checked window.
struct TailCertificate {
  SequenceExpr expr;
  OpenSet open;
  std::uint64_t start_index;
  std::uint64_t horizon;
  std::string justification;
};

/// Throws NotANeighborhood when cluster_set(e) is not inside o and
/// HorizonExceeded when no start index at or below cfg.scan_bound works.
TailCertificate certify_tail(const SequenceExpr& e, const OpenSet& o, const CertifyConfig& cfg = {});

/// Re-evaluates every term of the checked window.
bool recheck_certificate(const TailCertificate& cert);

nlohmann::json to_json(const TailCertificate& cert);
TailCertificate certificate_from_json(const nlohmann::json& j);

}  // namespace limiter
