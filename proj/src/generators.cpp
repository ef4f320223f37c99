#include "limiter/generators.hpp"

#include <algorithm>
#include <set>

namespace limiter::gen {

namespace {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

template <class T>
const T& pick(Rng& rng, const std::vector<T>& from) {
  return from[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(from.size()) - 1))];
}

Rational margin(Rng& rng) {
  static const std::vector<Rational> margins = {Rational(1, 1000), Rational(1, 100), Rational(1, 10),
                                                Rational(1, 2),    Rational(1),      Rational(3)};
  return pick(rng, margins);
}

ExtendedReal far_cut(Rng& rng) {
  static const std::vector<long> cuts = {-3, 0, 10, 100, 1000};
  return ExtendedReal(cuts[static_cast<std::size_t>(uniform(rng, 0, 4))]);
}

}  // namespace

Rational rational(Rng& rng) {
  static const long dens[] = {1, 2, 3, 4, 5, 10};
  Rational r(uniform(rng, -24, 24), dens[uniform(rng, 0, 5)]);
  r.canonicalize();
  return r;
}

ExtendedReal point(Rng& rng) {
  const long roll = uniform(rng, 0, 9);
  if (roll == 0) return ExtendedReal::neg_infinity();
  if (roll == 1) return ExtendedReal::pos_infinity();
  return ExtendedReal(rational(rng));
}

OpenSet open_set(Rng& rng) {
  const long shape = uniform(rng, 0, 19);
  if (shape == 0) return OpenSet::empty();
  if (shape == 1) return OpenSet::whole();
  const auto ninf = ExtendedReal::neg_infinity();
  const auto pinf = ExtendedReal::pos_infinity();
  std::vector<OpenInterval> pieces;
  const long count = uniform(rng, 1, 4);
  for (long i = 0; i < count; ++i) {
    ExtendedReal a(rational(rng));
    ExtendedReal b(rational(rng));
    if (b < a) std::swap(a, b);
    if (a == b) b = ExtendedReal(Rational(a.value() + 1));
    switch (uniform(rng, 0, 5)) {
      case 0: pieces.push_back(OpenInterval::make(ninf, b, true, false)); break;   // [-inf, b)
      case 1: pieces.push_back(OpenInterval::make(a, pinf, false, true)); break;   // (a, +inf]
      case 2: pieces.push_back(OpenInterval::make(ninf, b, false, false)); break;  // (-inf, b)
      default: pieces.push_back(OpenInterval::make(a, b)); break;
    }
  }
  return OpenSet::canonicalize(std::move(pieces));
}

OpenSet neighborhood(Rng& rng, const ClusterSet& c) {
  std::vector<OpenInterval> pieces;
  for (const auto& iv : c.intervals()) {
    OpenInterval piece;
    if (iv.lo.is_neg_infinity()) {
      piece.lo = ExtendedReal::neg_infinity();
      piece.lo_closed = true;
    } else if (iv.lo.is_pos_infinity()) {
      piece.lo = far_cut(rng);
    } else {
      piece.lo = ExtendedReal(Rational(iv.lo.value() - margin(rng)));
    }
    if (iv.hi.is_pos_infinity()) {
      piece.hi = ExtendedReal::pos_infinity();
      piece.hi_closed = true;
    } else if (iv.hi.is_neg_infinity()) {
      piece.hi = far_cut(rng).negated();
    } else {
      piece.hi = ExtendedReal(Rational(iv.hi.value() + margin(rng)));
    }
    pieces.push_back(OpenInterval::make(piece.lo, piece.hi, piece.lo_closed, piece.hi_closed));
  }
  if (uniform(rng, 0, 2) == 0) {
    const auto extra = open_set(rng);
    pieces.insert(pieces.end(), extra.intervals().begin(), extra.intervals().end());
  }
  return OpenSet::canonicalize(std::move(pieces));
}

LimiterOpen limiter_open(Rng& rng, const LimiterPoint* must_contain) {
  LimiterOpen out;
  const long count = uniform(rng, 1, 4);
  for (long i = 0; i < count; ++i) out.basics.push_back({open_set(rng)});
  if (must_contain != nullptr) {
    const auto at = static_cast<std::size_t>(uniform(rng, 0, count - 1));
    out.basics[at] = {neighborhood(rng, must_contain->lambda())};
  }
  return out;
}

std::vector<ExtendedReal> probe_points(std::size_t count) {
  std::vector<ExtendedReal> out = {ExtendedReal::neg_infinity(), ExtendedReal::pos_infinity()};
  std::set<Rational> seen;
  // Walk numerators outward from 0 over denominators 1..4 until enough.
  for (long num = 0; out.size() < count; ++num) {
    for (long den = 1; den <= 4 && out.size() < count; ++den) {
      for (long s : {1L, -1L}) {
        Rational r(s * num, den);
        r.canonicalize();
        if (out.size() < count && seen.insert(r).second) out.emplace_back(r);
      }
    }
  }
  return out;
}

}  // namespace limiter::gen
