#pragma once

#include <string>
#include <vector>

#include "limiter/sequence.hpp"

namespace limiter {

/// Depth-1 expressions with small rational parameters, one or more per
/// constructor and per cluster-rule branch.
std::vector<SequenceExpr> corpus_leaves();

/// Deterministic closure of the leaves under affine, tail and interleave to
/// depth 3. Order is stable across runs.
std::vector<SequenceExpr> builtin_corpus();

/// One printed expression per line, preceded by a comment header; the file
/// shipped as data/corpus_manifest.txt is exactly this text.
std::string corpus_manifest();

}  // namespace limiter
