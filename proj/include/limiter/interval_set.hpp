#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "limiter/extended_real.hpp"

namespace limiter {

/// [lo, hi] with lo <= hi; lo == hi is a singleton, possibly at an infinity.
struct ClosedInterval {
  ExtendedReal lo;
  ExtendedReal hi;

  bool contains(const ExtendedReal& x) const { return lo <= x && x <= hi; }
  bool is_singleton() const { return lo == hi; }
  friend bool operator==(const ClosedInterval&, const ClosedInterval&) = default;
};

/// A nonempty closed subset of the extended line kept as a canonical finite
/// union of closed intervals: sorted, pairwise disjoint, and no two intervals
/// touching.
class ClusterSet {
 public:
  /// Throws EmptySetError when raw is empty and DomainError on lo > hi.
  static ClusterSet canonicalize(std::vector<ClosedInterval> raw);
  static ClusterSet singleton(const ExtendedReal& x) { return canonicalize({{x, x}}); }
  static ClusterSet whole_line() {
    return canonicalize({{ExtendedReal::neg_infinity(), ExtendedReal::pos_infinity()}});
  }

  const std::vector<ClosedInterval>& intervals() const noexcept { return intervals_; }

  bool contains(const ExtendedReal& x) const;
  bool is_singleton() const { return intervals_.size() == 1 && intervals_.front().is_singleton(); }
  /// The unique element when is_singleton().
  std::optional<ExtendedReal> singleton_value() const;

  /// Set inclusion.
  bool subset_of(const ClusterSet& other) const;

  ClusterSet united(const ClusterSet& other) const;

  /// The image under x -> s*x + t; s == 0 collapses to {t}.
  ClusterSet affine_image(const Rational& s, const Rational& t) const;

  friend bool operator==(const ClusterSet&, const ClusterSet&) = default;

 private:
  explicit ClusterSet(std::vector<ClosedInterval> iv) : intervals_(std::move(iv)) {}
  std::vector<ClosedInterval> intervals_;
};

/// An open interval of the extended line. An endpoint may be closed only
/// when it is infinite, which yields the rays [-inf, b), (a, +inf] and the
/// whole space [-inf, +inf]. Always lo < hi.
struct OpenInterval {
  ExtendedReal lo;
  ExtendedReal hi;
  bool lo_closed = false;
  bool hi_closed = false;

  /// Throws DomainError when the invariants above fail.
  static OpenInterval make(ExtendedReal lo, ExtendedReal hi, bool lo_closed = false, bool hi_closed = false);
  static OpenInterval whole() {
    return {ExtendedReal::neg_infinity(), ExtendedReal::pos_infinity(), true, true};
  }

  bool contains(const ExtendedReal& x) const;
  bool valid() const;
  friend bool operator==(const OpenInterval&, const OpenInterval&) = default;
};

/// An open subset of the extended line: a canonical finite union of open
/// intervals. Touching open intervals such as (0,1) and (1,2) stay split.
class OpenSet {
 public:
  OpenSet() = default;

  static OpenSet canonicalize(std::vector<OpenInterval> raw);
  static OpenSet empty() { return {}; }
  static OpenSet whole() { return canonicalize({OpenInterval::whole()}); }

  const std::vector<OpenInterval>& intervals() const noexcept { return intervals_; }
  bool is_empty() const noexcept { return intervals_.empty(); }
  bool is_whole() const { return intervals_.size() == 1 && intervals_.front() == OpenInterval::whole(); }

  bool contains(const ExtendedReal& x) const;

  /// True when this set is contained in other.
  bool subset_of(const OpenSet& other) const;

  /// {x : s*x + t in this}, s != 0.
  OpenSet affine_preimage(const Rational& s, const Rational& t) const;

  friend bool operator==(const OpenSet&, const OpenSet&) = default;

 private:
  explicit OpenSet(std::vector<OpenInterval> iv) : intervals_(std::move(iv)) {}
  std::vector<OpenInterval> intervals_;
};

ClusterSet canonicalize_closed(std::vector<ClosedInterval> raw);
OpenSet canonicalize_open(std::vector<OpenInterval> raw);

/// Whether every point of c lies in o. A closed interval is inside an open
/// set exactly when both endpoints lie in the same component.
bool closed_subset_of_open(const ClusterSet& c, const OpenSet& o);

OpenSet intersect_open(const OpenSet& u, const OpenSet& v);
OpenSet union_open(const OpenSet& u, const OpenSet& v);

bool open_contains(const OpenSet& o, const ExtendedReal& x);

/// Finite endpoints of o's components, sorted and deduplicated.
std::vector<Rational> finite_breakpoints(const OpenSet& o);

/// Rebuilds an open set from a membership predicate that can only change
/// value at the given breakpoints. The line is cut into atoms {-inf}, gap,
/// {b1}, gap, ..., {bk}, gap, {+inf}; each atom is probed once. Throws
/// DomainError when the probed set is not open.
OpenSet reconstruct_open(const std::vector<Rational>& breakpoints,
                         const std::function<bool(const ExtendedReal&)>& member);

}  // namespace limiter
