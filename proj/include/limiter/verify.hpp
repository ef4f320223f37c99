#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "limiter/cluster.hpp"
#include "limiter/sequence.hpp"

namespace limiter {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;  // first counterexample when failed
};

struct VerifyConfig {
  std::uint64_t seed = 20240601;
  std::size_t open_sets = 500;
  std::size_t axiom1_pairs = 1000;
  std::size_t axiom5_pairs = 200;
  std::size_t probes = 200;
  CertifyConfig certify;
};

// Suites run over a corpus (normally builtin_corpus()). Each returns one
// result per named law.
std::vector<CheckResult> verify_properties(const std::vector<SequenceExpr>& corpus, const VerifyConfig& cfg);
std::vector<CheckResult> verify_theorem1(const std::vector<SequenceExpr>& corpus, const VerifyConfig& cfg);
std::vector<CheckResult> verify_axioms(const std::vector<SequenceExpr>& corpus, const VerifyConfig& cfg);
std::vector<CheckResult> verify_universality(const std::vector<SequenceExpr>& corpus, const VerifyConfig& cfg);

/// suite is one of properties, theorem1, axioms, universality, all.
/// Throws DomainError for an unknown suite name.
std::vector<CheckResult> run_suite(const std::string& suite, const std::vector<SequenceExpr>& corpus,
                                   const VerifyConfig& cfg);

nlohmann::json to_json(const CheckResult& r);

}  // namespace limiter
