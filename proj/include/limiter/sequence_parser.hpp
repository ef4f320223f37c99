#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "limiter/sequence.hpp"

namespace limiter {

/// Parses one expression. `line` is only used to label errors.
/// Throws SyntaxError, ArityError or DomainError.
SequenceExpr parse_expr(std::string_view text, std::size_t line = 1);

/// Canonical text; parse_expr(print_expr(e)) == e.
std::string print_expr(const SequenceExpr& e);

std::string print_polynomial(const Polynomial& p);

/// One expression per line; blank lines and lines starting with '#' are
/// skipped. Errors carry the 1-based line number of the offending line.
std::vector<SequenceExpr> parse_expr_list(std::string_view content);

}  // namespace limiter
