#include "limiter/cluster.hpp"

#include <algorithm>

#include "limiter/errors.hpp"
#include "limiter/eval.hpp"
#include "limiter/literal.hpp"
#include "limiter/sequence_parser.hpp"

namespace limiter {

namespace {

ClusterSet ratio_cluster(const expr::Ratio& r) {
  if (r.p.degree() < r.q.degree()) return ClusterSet::singleton(ExtendedReal(0));
  Rational lead(r.p.leading(), r.q.leading());
  lead.canonicalize();
  if (r.p.degree() == r.q.degree()) return ClusterSet::singleton(ExtendedReal(lead));
  return ClusterSet::singleton(ExtendedReal::infinity(sgn(lead)));
}

ClusterSet geom_cluster(const expr::Geom& g) {
  const ExtendedReal zero(0);
  if (g.a == 0 || abs(g.r) < 1) return ClusterSet::singleton(zero);
  if (g.r == 1) return ClusterSet::singleton(ExtendedReal(g.a));
  if (g.r == -1) return ClusterSet::canonicalize({{ExtendedReal(g.a), ExtendedReal(g.a)},
                                                  {ExtendedReal(Rational(-g.a)), ExtendedReal(Rational(-g.a))}});
  if (g.r > 1) return ClusterSet::singleton(ExtendedReal::infinity(sgn(g.a)));
  return ClusterSet::canonicalize({{ExtendedReal::neg_infinity(), ExtendedReal::neg_infinity()},
                                   {ExtendedReal::pos_infinity(), ExtendedReal::pos_infinity()}});
}

// Compactified distance from a term to the nearest point of a cluster set.
Rational distance_to(const ExtendedReal& x, const ClusterSet& c) {
  if (c.contains(x)) return Rational(0);
  std::optional<Rational> best;
  for (const auto& iv : c.intervals()) {
    const auto& nearest = x < iv.lo ? iv.lo : iv.hi;
    Rational d = compactify_metric(x, nearest);
    if (!best || d < *best) best = d;
  }
  return *best;
}

struct Partial {
  std::uint64_t start;
  std::string tag;
};

std::uint64_t forward_scan(const SequenceExpr& e, const OpenSet& o, std::uint64_t from, const CertifyConfig& cfg) {
  std::uint64_t run_start = from;
  for (std::uint64_t n = from;; ++n) {
    if (!term_in_open(eval_term(e, n), o)) {
      run_start = n + 1;
      if (run_start > cfg.scan_bound) {
        throw HorizonExceeded("no tail of " + print_expr(e) + " inside " + to_string(o) + " starts at or below " +
                              std::to_string(cfg.scan_bound));
      }
    } else if (n - run_start >= cfg.horizon) {
      return run_start;
    }
  }
}

// First index n in [start, start + horizon] whose term misses o.
std::optional<std::uint64_t> first_violation(const SequenceExpr& e, const OpenSet& o, std::uint64_t start,
                                             std::uint64_t horizon) {
  for (std::uint64_t n = start; n <= start + horizon; ++n) {
    if (!term_in_open(eval_term(e, n), o)) return n;
  }
  return std::nullopt;
}

bool distance_monotone(const SequenceExpr& e, const ClusterSet& lambda, std::uint64_t start, std::uint64_t horizon) {
  Rational prev = distance_to(to_extended(eval_term(e, start)), lambda);
  for (std::uint64_t n = start + 1; n <= start + horizon; ++n) {
    Rational d = distance_to(to_extended(eval_term(e, n)), lambda);
    if (d > prev) return false;
    prev = d;
  }
  return true;
}

Partial certify_leaf(const SequenceExpr& e, const OpenSet& o, const CertifyConfig& cfg, std::string tag) {
  const auto start = forward_scan(e, o, 1, cfg);
  if (tag == "monotone-distance" && !distance_monotone(e, cluster_set(e), start, cfg.horizon)) tag = "window-only";
  return {start, tag};
}

Partial certify_node(const SequenceExpr& e, const OpenSet& o, const CertifyConfig& cfg) {
  return std::visit(
      [&](const auto& node) -> Partial {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, expr::Const>) {
          return certify_leaf(e, o, cfg, "constant");
        } else if constexpr (std::is_same_v<T, expr::Arith>) {
          return certify_leaf(e, o, cfg, node.b == 0 ? "constant" : "monotone-distance");
        } else if constexpr (std::is_same_v<T, expr::Geom>) {
          if (node.a == 0 || node.r == 0 || node.r == 1) return certify_leaf(e, o, cfg, "constant");
          if (node.r == -1) return certify_leaf(e, o, cfg, "periodic");
          return certify_leaf(e, o, cfg, "monotone-distance");
        } else if constexpr (std::is_same_v<T, expr::Ratio>) {
          return certify_leaf(e, o, cfg, "monotone-distance");
        } else if constexpr (std::is_same_v<T, expr::DenseOsc>) {
          return certify_leaf(e, o, cfg, "bounded-by-cluster-set");
        } else if constexpr (std::is_same_v<T, expr::EnumRationals>) {
          return certify_leaf(e, o, cfg, "whole-space");
        } else if constexpr (std::is_same_v<T, expr::Affine>) {
          if (node.scale == 0) return {1, "constant"};
          auto inner = certify_node(node.inner, o.affine_preimage(node.scale, node.offset), cfg);
          return {inner.start, "affine(" + inner.tag + ")"};
        } else if constexpr (std::is_same_v<T, expr::Tail>) {
          auto inner = certify_node(node.inner, o, cfg);
          const std::uint64_t start = inner.start > node.skip ? inner.start - node.skip : 1;
          return {start, "tail(" + inner.tag + ")"};
        } else {
          // Positions (k-1)*m + j with k >= max child start are all in tails.
          const std::uint64_t m = node.children.size();
          std::uint64_t latest = 1;
          std::string tag = "interleave(";
          for (std::size_t j = 0; j < node.children.size(); ++j) {
            auto child = certify_node(node.children[j], o, cfg);
            latest = std::max(latest, child.start);
            tag += (j ? "," : "") + child.tag;
          }
          return {(latest - 1) * m + 1, tag + ")"};
        }
      },
      e.node().value);
}

}  // namespace

ClusterSet cluster_set(const SequenceExpr& e) {
  return std::visit(
      [](const auto& node) -> ClusterSet {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, expr::Const>) {
          return ClusterSet::singleton(ExtendedReal(node.value));
        } else if constexpr (std::is_same_v<T, expr::Arith>) {
          if (node.b == 0) return ClusterSet::singleton(ExtendedReal(node.a));
          return ClusterSet::singleton(ExtendedReal::infinity(sgn(node.b)));
        } else if constexpr (std::is_same_v<T, expr::Geom>) {
          return geom_cluster(node);
        } else if constexpr (std::is_same_v<T, expr::Ratio>) {
          return ratio_cluster(node);
        } else if constexpr (std::is_same_v<T, expr::Affine>) {
          return cluster_set(node.inner).affine_image(node.scale, node.offset);
        } else if constexpr (std::is_same_v<T, expr::Interleave>) {
          std::vector<ClosedInterval> all;
          for (const auto& c : node.children) {
            const auto child = cluster_set(c);
            all.insert(all.end(), child.intervals().begin(), child.intervals().end());
          }
          return ClusterSet::canonicalize(std::move(all));
        } else if constexpr (std::is_same_v<T, expr::Tail>) {
          return cluster_set(node.inner);
        } else if constexpr (std::is_same_v<T, expr::DenseOsc>) {
          return ClusterSet::canonicalize({{ExtendedReal(node.lo), ExtendedReal(node.hi)}});
        } else {
          return ClusterSet::whole_line();
        }
      },
      e.node().value);
}

ConvergenceClass convergence_class(const SequenceExpr& e) {
  auto lambda = cluster_set(e);
  if (auto x = lambda.singleton_value()) return ConvergentTo{*x};
  return Oscillating{std::move(lambda)};
}

TailCertificate certify_tail(const SequenceExpr& e, const OpenSet& o, const CertifyConfig& cfg) {
  const auto lambda = cluster_set(e);
  if (!closed_subset_of_open(lambda, o)) {
    throw NotANeighborhood("cluster set " + to_string(lambda) + " of " + print_expr(e) + " is not inside " +
                           to_string(o));
  }
  auto partial = certify_node(e, o, cfg);
  std::uint64_t start = partial.start;
  // Combined starts (interleave, tail) are re-checked on the full window; a
  // miss restarts a plain scan just past it.
  while (auto bad = first_violation(e, o, start, cfg.horizon)) {
    start = forward_scan(e, o, *bad + 1, cfg);
    partial.tag = "rescanned(" + partial.tag + ")";
  }
  if (start > cfg.scan_bound) {
    throw HorizonExceeded("tail of " + print_expr(e) + " starts past the scan bound " + std::to_string(cfg.scan_bound));
  }
  return {e, o, start, cfg.horizon, partial.tag};
}

bool recheck_certificate(const TailCertificate& cert) {
  return !first_violation(cert.expr, cert.open, cert.start_index, cert.horizon).has_value();
}

nlohmann::json to_json(const TailCertificate& cert) {
  return {{"expr", print_expr(cert.expr)},
          {"open", to_string(cert.open)},
          {"startIndex", cert.start_index},
          {"horizon", cert.horizon},
          {"justification", cert.justification}};
}

TailCertificate certificate_from_json(const nlohmann::json& j) {
  return {parse_expr(j.at("expr").get<std::string>()), parse_open_set(j.at("open").get<std::string>()),
          j.at("startIndex").get<std::uint64_t>(), j.at("horizon").get<std::uint64_t>(),
          j.at("justification").get<std::string>()};
}

}  // namespace limiter
