#include "limiter/interval_set.hpp"

#include <algorithm>

#include "limiter/errors.hpp"

namespace limiter {

ClusterSet ClusterSet::canonicalize(std::vector<ClosedInterval> raw) {
  if (raw.empty()) throw EmptySetError("a cluster set is never empty");
  for (const auto& iv : raw) {
    if (iv.hi < iv.lo) throw DomainError("closed interval with lo > hi: [" + to_string(iv.lo) + "," + to_string(iv.hi) + "]");
  }
  std::sort(raw.begin(), raw.end(), [](const ClosedInterval& a, const ClosedInterval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.hi < b.hi;
  });
  std::vector<ClosedInterval> out;
  out.reserve(raw.size());
  for (auto& iv : raw) {
    // Closed intervals merge as soon as they share a point.
    if (!out.empty() && iv.lo <= out.back().hi) {
      if (out.back().hi < iv.hi) out.back().hi = iv.hi;
    } else {
      out.push_back(std::move(iv));
    }
  }
  return ClusterSet(std::move(out));
}

bool ClusterSet::contains(const ExtendedReal& x) const {
  return std::any_of(intervals_.begin(), intervals_.end(), [&](const ClosedInterval& iv) { return iv.contains(x); });
}

std::optional<ExtendedReal> ClusterSet::singleton_value() const {
  if (!is_singleton()) return std::nullopt;
  return intervals_.front().lo;
}

bool ClusterSet::subset_of(const ClusterSet& other) const {
  for (const auto& iv : intervals_) {
    const bool inside = std::any_of(other.intervals_.begin(), other.intervals_.end(), [&](const ClosedInterval& o) {
      return o.lo <= iv.lo && iv.hi <= o.hi;
    });
    if (!inside) return false;
  }
  return true;
}

ClusterSet ClusterSet::united(const ClusterSet& other) const {
  std::vector<ClosedInterval> all = intervals_;
  all.insert(all.end(), other.intervals_.begin(), other.intervals_.end());
  return canonicalize(std::move(all));
}

ClusterSet ClusterSet::affine_image(const Rational& s, const Rational& t) const {
  if (s == 0) return singleton(ExtendedReal(t));
  std::vector<ClosedInterval> mapped;
  mapped.reserve(intervals_.size());
  for (const auto& iv : intervals_) {
    auto a = iv.lo.affine(s, t);
    auto b = iv.hi.affine(s, t);
    if (s < 0) std::swap(a, b);
    mapped.push_back({a, b});
  }
  return canonicalize(std::move(mapped));
}

bool OpenInterval::valid() const {
  if (!(lo < hi)) return false;
  if (lo_closed && !lo.is_neg_infinity()) return false;
  if (hi_closed && !hi.is_pos_infinity()) return false;
  return true;
}

OpenInterval OpenInterval::make(ExtendedReal lo, ExtendedReal hi, bool lo_closed, bool hi_closed) {
  OpenInterval iv{std::move(lo), std::move(hi), lo_closed, hi_closed};
  if (!iv.valid()) {
    throw DomainError("not an open interval of the extended line: " + std::string(lo_closed ? "[" : "(") +
                      to_string(iv.lo) + "," + to_string(iv.hi) + (hi_closed ? "]" : ")"));
  }
  return iv;
}

bool OpenInterval::contains(const ExtendedReal& x) const {
  if (lo < x && x < hi) return true;
  return (lo_closed && x == lo) || (hi_closed && x == hi);
}

namespace {

// Compare lower endpoints: a closed lower endpoint starts earlier than an
// open one at the same value.
bool lower_before(const OpenInterval& a, const OpenInterval& b) {
  if (a.lo != b.lo) return a.lo < b.lo;
  return a.lo_closed && !b.lo_closed;
}

// Whether the union of a and b (a starting no later than b) is one interval.
bool overlaps(const OpenInterval& a, const OpenInterval& b) {
  if (b.lo < a.hi) return true;
  return b.lo == a.hi && (a.hi_closed || b.lo_closed);
}

void extend_upper(OpenInterval& target, const OpenInterval& src) {
  if (target.hi < src.hi) {
    target.hi = src.hi;
    target.hi_closed = src.hi_closed;
  } else if (target.hi == src.hi) {
    target.hi_closed = target.hi_closed || src.hi_closed;
  }
}

std::optional<OpenInterval> intersect(const OpenInterval& a, const OpenInterval& b) {
  OpenInterval r;
  if (a.lo == b.lo) {
    r.lo = a.lo;
    r.lo_closed = a.lo_closed && b.lo_closed;
  } else {
    const auto& later = a.lo < b.lo ? b : a;
    r.lo = later.lo;
    r.lo_closed = later.lo_closed;
  }
  if (a.hi == b.hi) {
    r.hi = a.hi;
    r.hi_closed = a.hi_closed && b.hi_closed;
  } else {
    const auto& earlier = a.hi < b.hi ? a : b;
    r.hi = earlier.hi;
    r.hi_closed = earlier.hi_closed;
  }
  if (!(r.lo < r.hi)) return std::nullopt;
  return r;
}

}  // namespace

OpenSet OpenSet::canonicalize(std::vector<OpenInterval> raw) {
  for (const auto& iv : raw) {
    if (!iv.valid()) throw DomainError("invalid open interval (" + to_string(iv.lo) + "," + to_string(iv.hi) + ")");
  }
  std::sort(raw.begin(), raw.end(), lower_before);
  std::vector<OpenInterval> out;
  out.reserve(raw.size());
  for (auto& iv : raw) {
    if (!out.empty() && overlaps(out.back(), iv)) {
      extend_upper(out.back(), iv);
    } else {
      out.push_back(std::move(iv));
    }
  }
  return OpenSet(std::move(out));
}

bool OpenSet::contains(const ExtendedReal& x) const {
  // Components are sorted; a linear scan is fine for the sizes in play.
  return std::any_of(intervals_.begin(), intervals_.end(), [&](const OpenInterval& iv) { return iv.contains(x); });
}

bool OpenSet::subset_of(const OpenSet& other) const {
  for (const auto& iv : intervals_) {
    const bool inside = std::any_of(other.intervals_.begin(), other.intervals_.end(), [&](const OpenInterval& o) {
      const bool lo_ok = o.lo < iv.lo || (o.lo == iv.lo && (o.lo_closed || !iv.lo_closed));
      const bool hi_ok = iv.hi < o.hi || (o.hi == iv.hi && (o.hi_closed || !iv.hi_closed));
      return lo_ok && hi_ok;
    });
    if (!inside) return false;
  }
  return true;
}

OpenSet OpenSet::affine_preimage(const Rational& s, const Rational& t) const {
  if (s == 0) throw DomainError("affine preimage needs a nonzero scale");
  const Rational inv_s = 1 / s;
  const Rational shift = -t / s;
  std::vector<OpenInterval> mapped;
  mapped.reserve(intervals_.size());
  for (const auto& iv : intervals_) {
    OpenInterval m{iv.lo.affine(inv_s, shift), iv.hi.affine(inv_s, shift), iv.lo_closed, iv.hi_closed};
    if (s < 0) {
      std::swap(m.lo, m.hi);
      std::swap(m.lo_closed, m.hi_closed);
    }
    mapped.push_back(std::move(m));
  }
  return canonicalize(std::move(mapped));
}

ClusterSet canonicalize_closed(std::vector<ClosedInterval> raw) { return ClusterSet::canonicalize(std::move(raw)); }

OpenSet canonicalize_open(std::vector<OpenInterval> raw) { return OpenSet::canonicalize(std::move(raw)); }

bool closed_subset_of_open(const ClusterSet& c, const OpenSet& o) {
  for (const auto& iv : c.intervals()) {
    const bool inside = std::any_of(o.intervals().begin(), o.intervals().end(), [&](const OpenInterval& comp) {
      return comp.contains(iv.lo) && comp.contains(iv.hi);
    });
    if (!inside) return false;
  }
  return true;
}

OpenSet intersect_open(const OpenSet& u, const OpenSet& v) {
  std::vector<OpenInterval> pieces;
  for (const auto& a : u.intervals()) {
    for (const auto& b : v.intervals()) {
      if (auto r = intersect(a, b)) pieces.push_back(std::move(*r));
    }
  }
  return OpenSet::canonicalize(std::move(pieces));
}

OpenSet union_open(const OpenSet& u, const OpenSet& v) {
  std::vector<OpenInterval> all = u.intervals();
  all.insert(all.end(), v.intervals().begin(), v.intervals().end());
  return OpenSet::canonicalize(std::move(all));
}

bool open_contains(const OpenSet& o, const ExtendedReal& x) { return o.contains(x); }

std::vector<Rational> finite_breakpoints(const OpenSet& o) {
  std::vector<Rational> breaks;
  for (const auto& iv : o.intervals()) {
    if (iv.lo.is_finite()) breaks.push_back(iv.lo.value());
    if (iv.hi.is_finite()) breaks.push_back(iv.hi.value());
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  return breaks;
}

OpenSet reconstruct_open(const std::vector<Rational>& breakpoints,
                         const std::function<bool(const ExtendedReal&)>& member) {
  struct Atom {
    ExtendedReal left;
    ExtendedReal right;
    bool point;
    ExtendedReal probe;
  };
  const auto ninf = ExtendedReal::neg_infinity();
  const auto pinf = ExtendedReal::pos_infinity();
  std::vector<Atom> atoms;
  atoms.push_back({ninf, ninf, true, ninf});
  if (breakpoints.empty()) {
    atoms.push_back({ninf, pinf, false, ExtendedReal(0)});
  } else {
    const auto& first = breakpoints.front();
    atoms.push_back({ninf, ExtendedReal(first), false, ExtendedReal(Rational(first - 1))});
    for (std::size_t i = 0; i < breakpoints.size(); ++i) {
      const ExtendedReal here(breakpoints[i]);
      atoms.push_back({here, here, true, here});
      if (i + 1 < breakpoints.size()) {
        Rational mid = (breakpoints[i] + breakpoints[i + 1]) / 2;
        atoms.push_back({here, ExtendedReal(breakpoints[i + 1]), false, ExtendedReal(mid)});
      }
    }
    const auto& last = breakpoints.back();
    atoms.push_back({ExtendedReal(last), pinf, false, ExtendedReal(Rational(last + 1))});
  }
  atoms.push_back({pinf, pinf, true, pinf});

  std::vector<bool> in(atoms.size());
  for (std::size_t i = 0; i < atoms.size(); ++i) in[i] = member(atoms[i].probe);

  std::vector<OpenInterval> pieces;
  for (std::size_t i = 0; i < atoms.size();) {
    if (!in[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < atoms.size() && in[j + 1]) ++j;
    pieces.push_back(OpenInterval::make(atoms[i].left, atoms[j].right, atoms[i].point, atoms[j].point));
    i = j + 1;
  }
  return OpenSet::canonicalize(std::move(pieces));
}

}  // namespace limiter
