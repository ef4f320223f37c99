#include "limiter/verify.hpp"

#include <algorithm>
#include <map>

#include "limiter/errors.hpp"
#include "limiter/generators.hpp"
#include "limiter/hyperspace.hpp"
#include "limiter/literal.hpp"
#include "limiter/sequence_parser.hpp"

namespace limiter {

namespace {

// Accumulates cases for one law and keeps the first counterexample.
class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::string& what) {
    ++result_.cases;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = what;
    }
  }
  // Counterexample text is built lazily; most cases pass.
  template <class F>
  void expect_lazy(bool ok, F&& describe) {
    ++result_.cases;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = describe();
    }
  }
  void fail(const std::string& what) { expect(false, what); }

  CheckResult done() && { return std::move(result_); }

 private:
  CheckResult result_;
};

std::vector<LimiterPoint> points_of(const std::vector<SequenceExpr>& corpus) {
  std::vector<LimiterPoint> out;
  out.reserve(corpus.size());
  for (const auto& e : corpus) out.push_back(limit_of(e));
  return out;
}

std::vector<OpenSet> random_opens(gen::Rng& rng, std::size_t count) {
  std::vector<OpenSet> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(gen::open_set(rng));
  return out;
}

std::size_t index(gen::Rng& rng, std::size_t size) {
  return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng);
}

}  // namespace

std::vector<CheckResult> verify_properties(const std::vector<SequenceExpr>& corpus, const VerifyConfig& cfg) {
  gen::Rng rng(cfg.seed);
  const auto points = points_of(corpus);
  const auto opens = random_opens(rng, cfg.open_sets);
  const BasicOpen whole{OpenSet::whole()};
  const BasicOpen empty{OpenSet::empty()};
  std::vector<CheckResult> out;

  {
    Check c("property 1: whole* is everything, empty* is nothing");
    for (const auto& p : points) {
      c.expect_lazy(member_basic(p, whole), [&] { return print_expr(p.witness()) + " not in whole*"; });
      c.expect_lazy(!member_basic(p, empty), [&] { return print_expr(p.witness()) + " in empty*"; });
    }
    out.push_back(std::move(c).done());
  }
  {
    Check c("property 2: U ⊆ V implies U* ⊆ V*");
    for (std::size_t i = 0; i < opens.size(); ++i) {
      const auto& v = opens[i];
      const auto u = intersect_open(v, opens[(i + 1) % opens.size()]);
      c.expect(u.subset_of(v), "intersection not inside its operand");
      for (const auto& p : points) {
        if (member_basic(p, {u})) {
          c.expect_lazy(member_basic(p, {v}), [&] { return print_expr(p.witness()) + " in " + to_string(u) + "* but not " + to_string(v) + "*"; });
        }
      }
    }
    out.push_back(std::move(c).done());
  }
  {
    Check c("property 3: (O1 ∩ ... ∩ Ok)* = O1* ∩ ... ∩ Ok*");
    for (std::size_t i = 0; i < opens.size(); ++i) {
      const std::size_t k = 2 + i % 4;
      std::vector<OpenSet> family;
      for (std::size_t j = 0; j < k; ++j) family.push_back(opens[(i + j * 7) % opens.size()]);
      OpenSet meet = OpenSet::whole();
      for (const auto& o : family) meet = intersect_open(meet, o);
      for (const auto& p : points) {
        const bool lhs = member_basic(p, {meet});
        const bool rhs = std::all_of(family.begin(), family.end(), [&](const OpenSet& o) { return member_basic(p, {o}); });
        c.expect_lazy(lhs == rhs, [&] { return print_expr(p.witness()) + " against " + to_string(meet); });
      }
    }
    out.push_back(std::move(c).done());
  }
  {
    Check c("property 4: include(x) ∈ O* iff x ∈ O");
    const auto probes = gen::probe_points(cfg.probes);
    for (const auto& o : opens) {
      for (const auto& x : probes) {
        c.expect_lazy(member_basic(include(x), {o}) == open_contains(o, x),
                      [&] { return to_string(x) + " vs " + to_string(o); });
      }
    }
    out.push_back(std::move(c).done());
  }
  {
    Check c("basis: basics cover and intersections refine");
    for (const auto& p : points) c.expect(member_basic(p, whole), print_expr(p.witness()) + " uncovered");
    for (std::size_t i = 0; i < opens.size(); ++i) {
      const BasicOpen b1{opens[i]};
      const BasicOpen b2{opens[(i + 3) % opens.size()]};
      const auto b3 = intersect_basics(b1, b2);
      for (const auto& p : points) {
        const bool both = member_basic(p, b1) && member_basic(p, b2);
        c.expect_lazy(both == member_basic(p, b3), [&] { return print_expr(p.witness()) + " in " + to_string(b3.generator); });
      }
    }
    out.push_back(std::move(c).done());
  }
  {
    Check c("embedding: include is injective");
    const auto probes = gen::probe_points(cfg.probes);
    for (std::size_t i = 0; i < probes.size(); ++i) {
      for (std::size_t j = 0; j < probes.size(); ++j) {
        c.expect_lazy((include(probes[i]) == include(probes[j])) == (i == j),
                      [&] { return to_string(probes[i]) + " / " + to_string(probes[j]); });
      }
    }
    out.push_back(std::move(c).done());
  }
  {
    Check c("embedding: i^-1(O*) = O and i(O) = O* ∩ i(line)");
    const auto probes = gen::probe_points(cfg.probes);
    for (const auto& o : opens) {
      const auto pre = inclusion_preimage({o});
      c.expect_lazy(pre == o, [&] { return to_string(pre) + " != " + to_string(o); });
      for (const auto& x : probes) {
        c.expect_lazy(open_contains(o, x) == member_basic(include(x), {o}),
                      [&] { return to_string(x) + " vs " + to_string(o); });
      }
    }
    out.push_back(std::move(c).done());
  }
  return out;
}

std::vector<CheckResult> verify_theorem1(const std::vector<SequenceExpr>& corpus, const VerifyConfig&) {
  std::vector<std::pair<const SequenceExpr*, ExtendedReal>> convergent;
  for (const auto& e : corpus) {
    const auto cls = convergence_class(e);
    if (auto* c = std::get_if<ConvergentTo>(&cls)) convergent.emplace_back(&e, c->limit);
  }
  std::vector<ClusterSet> lambdas;
  lambdas.reserve(convergent.size());
  for (const auto& [e, _] : convergent) lambdas.push_back(cluster_set(*e));

  Check c("convergent pairs: equal limits iff similar");
  for (std::size_t i = 0; i < convergent.size(); ++i) {
    for (std::size_t j = i; j < convergent.size(); ++j) {
      const bool same_limit = convergent[i].second == convergent[j].second;
      const bool sim = lambdas[i] == lambdas[j];
      c.expect_lazy(same_limit == sim, [&] {
        return print_expr(*convergent[i].first) + " / " + print_expr(*convergent[j].first);
      });
    }
  }
  return {std::move(c).done()};
}

std::vector<CheckResult> verify_axioms(const std::vector<SequenceExpr>& corpus, const VerifyConfig& cfg) {
  gen::Rng rng(cfg.seed + 1);
  const auto points = points_of(corpus);
  std::vector<CheckResult> out;
  {
    Check c("axiom 1: the tail of i(x_n) enters every basic neighbourhood");
    for (std::size_t k = 0; k < cfg.axiom1_pairs; ++k) {
      const auto& p = points[index(rng, points.size())];
      const auto o = gen::neighborhood(rng, p.lambda());
      try {
        const auto cert = certify_tail(p.witness(), o, cfg.certify);
        c.expect_lazy(cert.horizon >= cfg.certify.horizon && recheck_certificate(cert),
                      [&] { return "bad certificate for " + print_expr(p.witness()); });
      } catch (const LimiterError& err) {
        c.fail(print_expr(p.witness()) + " in " + to_string(o) + ": " + err.what());
      }
    }
    out.push_back(std::move(c).done());
  }
  {
    Check c("axiom 2: include(lim x_n) = Lim(x_n) for convergent x_n");
    for (const auto& p : points) {
      if (auto x = classical_value(p)) {
        c.expect_lazy(include(*x) == p, [&] { return print_expr(p.witness()); });
      }
    }
    out.push_back(std::move(c).done());
  }
  {
    Check c("axiom 3: Lim(x) = Lim(y) iff x ~ y");
    for (std::size_t k = 0; k < 4 * corpus.size(); ++k) {
      const auto i = index(rng, corpus.size());
      const auto j = index(rng, corpus.size());
      c.expect_lazy((points[i] == points[j]) == similar(corpus[i], corpus[j]),
                    [&] { return print_expr(corpus[i]) + " / " + print_expr(corpus[j]); });
    }
    out.push_back(std::move(c).done());
  }
  {
    Check c("axiom 4: every point is the limit of its witness");
    for (const auto& p : points) c.expect_lazy(limit_of(p.witness()) == p, [&] { return print_expr(p.witness()); });
    out.push_back(std::move(c).done());
  }
  {
    Check c("axiom 5: Lim(y) ∈ V* iff Λ(y) ⊆ i^-1(V*)");
    for (std::size_t k = 0; k < cfg.axiom5_pairs; ++k) {
      const auto& p = points[index(rng, points.size())];
      const auto o = gen::limiter_open(rng, &p);
      try {
        const auto w = axiom5_witness(p, o);
        c.expect(member_basic(p, w), "witness does not contain the point");
        c.expect(std::find(o.basics.begin(), o.basics.end(), w) != o.basics.end(), "witness not taken from the open");
        const auto v = inclusion_preimage(w);
        for (const auto& y : points) {
          c.expect_lazy(member_basic(y, w) == closed_subset_of_open(y.lambda(), v),
                        [&] { return print_expr(y.witness()) + " against " + to_string(v); });
        }
      } catch (const NotMember& err) {
        c.fail(err.what());
      }
    }
    out.push_back(std::move(c).done());
  }
  return out;
}

std::vector<CheckResult> verify_universality(const std::vector<SequenceExpr>& corpus, const VerifyConfig& cfg) {
  gen::Rng rng(cfg.seed + 2);
  const auto points = points_of(corpus);
  std::vector<CheckResult> out;
  {
    Check c("T ∘ i = j");
    for (const auto& x : gen::probe_points(cfg.probes)) {
      c.expect_lazy(universal_map(include(x)) == j_embed(x), [&] { return to_string(x); });
    }
    out.push_back(std::move(c).done());
  }
  {
    Check c("T ∘ Lim = L");
    for (const auto& e : corpus) c.expect_lazy(universal_map(limit_of(e)) == l_functional(e), [&] { return print_expr(e); });
    out.push_back(std::move(c).done());
  }
  {
    Check c("continuity: T^-1(V) = (j^-1(V))*");
    for (std::size_t k = 0; k < cfg.open_sets; ++k) {
      const HyperBasicOpen v{gen::open_set(rng)};
      const auto pre = preimage_basic(v);
      c.expect_lazy(pre.generator == v.generator, [&] { return to_string(pre.generator) + " != " + to_string(v.generator); });
      for (const auto& p : points) {
        c.expect_lazy(member_basic(p, pre) == hyper_member(universal_map(p), v),
                      [&] { return print_expr(p.witness()) + " against " + to_string(v.generator); });
      }
    }
    out.push_back(std::move(c).done());
  }
  {
    Check c("T is a bijection onto the reachable hyperpoints");
    std::map<std::string, std::string> forward;   // lambda literal -> image literal
    std::map<std::string, std::string> backward;  // image literal -> lambda literal
    for (const auto& p : points) {
      const auto from = to_string(p.lambda());
      const auto to = to_string(universal_map(p).set);
      auto [fit, fnew] = forward.emplace(from, to);
      auto [bit, bnew] = backward.emplace(to, from);
      c.expect(fit->second == to, "T not well defined at " + from);
      c.expect(bit->second == from, "T not injective at " + to);
    }
    for (const auto& e : corpus) {
      c.expect_lazy(backward.contains(to_string(l_functional(e).set)), [&] { return "L(" + print_expr(e) + ") not reached"; });
    }
    out.push_back(std::move(c).done());
  }
  {
    Check c("uniqueness: any map agreeing with L on limits equals T");
    for (const auto& p : points) {
      c.expect_lazy(universal_map_via_witness(p) == universal_map(p), [&] { return print_expr(p.witness()); });
    }
    out.push_back(std::move(c).done());
  }
  return out;
}

std::vector<CheckResult> run_suite(const std::string& suite, const std::vector<SequenceExpr>& corpus,
                                   const VerifyConfig& cfg) {
  if (suite == "properties") return verify_properties(corpus, cfg);
  if (suite == "theorem1") return verify_theorem1(corpus, cfg);
  if (suite == "axioms") return verify_axioms(corpus, cfg);
  if (suite == "universality") return verify_universality(corpus, cfg);
  if (suite == "all") {
    std::vector<CheckResult> all;
    for (const char* s : {"properties", "theorem1", "axioms", "universality"}) {
      auto part = run_suite(s, corpus, cfg);
      all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return all;
  }
  throw DomainError("unknown verify suite '" + suite + "' (properties, theorem1, axioms, universality, all)");
}

nlohmann::json to_json(const CheckResult& r) {
  return {{"name", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"detail", r.detail}};
}

}  // namespace limiter
