#pragma once

#include <cstdint>
#include <variant>

#include "limiter/interval_set.hpp"
#include "limiter/sequence.hpp"

namespace limiter {

/// Exact for every constructor except denseosc, whose terms are irrational
/// and come back as a double. Any expression with a denseosc leaf under it
/// evaluates to a double.
using TermValue = std::variant<Rational, double>;

/// Term n (n >= 1). Throws IndexError for n < 1.
///
/// denseosc terms use long double for frac(n * golden ratio); the absolute
/// error of the fractional part stays below 1e-12 for n <= 10^6.
TermValue eval_term(const SequenceExpr& e, std::uint64_t n);

/// Double-precision evaluation for the numeric oracle. Terms that overflow
/// come back as +-HUGE_VAL; never NaN.
double eval_double(const SequenceExpr& e, std::uint64_t n);

/// Exact membership test; a double term is compared by its exact binary
/// value, an infinite double as the matching infinity.
bool term_in_open(const TermValue& v, const OpenSet& o);

ExtendedReal to_extended(const TermValue& v);
double to_double(const TermValue& v);

/// frac(n * golden ratio).
double golden_fraction(std::uint64_t n);

}  // namespace limiter
