#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "limiter/interval_set.hpp"
#include "limiter/limiter_space.hpp"

namespace limiter::gen {

// Seeded generators for randomized law checks. Everything draws from a
// caller-owned engine so runs are reproducible.

using Rng = std::mt19937_64;

/// p/q with |p| <= 24 and q in {1, 2, 3, 4, 5, 10}.
Rational rational(Rng& rng);

/// Mostly finite; each infinity with probability 1/10.
ExtendedReal point(Rng& rng);

/// 0-4 components mixing bounded intervals, rays and the whole space;
/// occasionally empty or whole.
OpenSet open_set(Rng& rng);

/// A random open set containing c: each component of c is widened by a
/// random margin (rays around infinite endpoints), and an unrelated random
/// open set may be added.
OpenSet neighborhood(Rng& rng, const ClusterSet& c);

/// 1-4 random basics; when `must_contain` is given, one of them (at a random
/// position) is a neighborhood of its cluster set.
LimiterOpen limiter_open(Rng& rng, const LimiterPoint* must_contain = nullptr);

/// `count` distinct points: both infinities plus rationals on a grid.
std::vector<ExtendedReal> probe_points(std::size_t count);

}  // namespace limiter::gen
