#include <doctest.h>

#include "limiter/corpus.hpp"
#include "limiter/errors.hpp"
#include "limiter/generators.hpp"
#include "limiter/hyperspace.hpp"
#include "limiter/limiter_space.hpp"
#include "limiter/literal.hpp"
#include "limiter/sequence_parser.hpp"
#include "limiter/verify.hpp"
#include "support.hpp"

using namespace limiter;
using namespace testing_support;

namespace {

LimiterPoint L(const char* text) { return limit_of(parse_expr(text)); }
BasicOpen B(const char* text) { return {parse_open_set(text)}; }

}  // namespace

TEST_CASE("limit points") {
  CHECK(L("const(7)").lambda() == parse_closed_set("{7}"));
  CHECK(L("interleave(const(3), const(5))").lambda() == parse_closed_set("{3,5}"));
  CHECK(L("enumrationals").lambda() == ClusterSet::whole_line());
  // Equality ignores the witness.
  CHECK(L("const(0)") == L("geom(1, 1/2)"));
  CHECK(L("const(0)").witness() != L("geom(1, 1/2)").witness());

  CHECK(similar(parse_expr("interleave(const(3), const(5))"), parse_expr("interleave(const(5), const(3))")));
  CHECK(similar(parse_expr("const(0)"), parse_expr("geom(1, 1/2)")));
  CHECK_FALSE(similar(parse_expr("const(0)"), parse_expr("const(1)")));

  CHECK(include(X(5)).lambda() == parse_closed_set("{5}"));
  CHECK(include(pinf()).lambda() == parse_closed_set("{+inf}"));
  CHECK(include(ninf()).lambda() == parse_closed_set("{-inf}"));
  CHECK(print_expr(include(pinf()).witness()) == "arith(0, 1)");

  CHECK(classical_value(include(X(5))) == X(5));
  CHECK_FALSE(classical_value(L("geom(1,-1)")).has_value());
  CHECK(classical_value(L("ratio(n, n+1)")) == X(1));
}

TEST_CASE("basic opens") {
  CHECK(member_basic(L("interleave(const(3), const(5))"), B("(2,6)")));
  CHECK_FALSE(member_basic(include(X(0)), B("(0,1)")));
  CHECK(member_basic(L("enumrationals"), B("[-inf,+inf]")));
  CHECK_FALSE(member_basic(L("enumrationals"), B("[-inf,5) ∪ (6,+inf]")));

  CHECK(intersect_basics(B("(0,4)"), B("(2,6)")) == B("(2,4)"));
  CHECK(intersect_basics(B("(0,4)"), B("[-inf,+inf]")) == B("(0,4)"));
  CHECK(intersect_basics(B("(0,1)"), B("(2,3)")).generator.is_empty());

  LimiterOpen o{{B("(-1,1)"), B("(5,6)")}};
  CHECK(axiom5_witness(include(X(0)), o) == B("(-1,1)"));
  LimiterOpen both{{B("(-2,2)"), B("(-1,1)")}};
  CHECK(axiom5_witness(include(X(0)), both) == B("(-2,2)"));
  CHECK_THROWS_AS(axiom5_witness(include(X(3)), o), NotMember);
  CHECK(member_open(include(X(11, 2)), o));
  CHECK_FALSE(member_open(include(X(3)), o));

  CHECK_FALSE(specialization_leq(include(X(0)), L("geom(1,-1)")));
  CHECK(specialization_leq(include(X(3)), L("interleave(const(3), const(5))")));
  CHECK(specialization_leq(L("geom(1,-1)"), L("geom(1,-1)")));
}

TEST_CASE("the space is not Hausdorff") {
  // {3} and {3,5} cannot be separated: every basic around {3,5} contains {3}.
  gen::Rng rng(41);
  const auto p = L("interleave(const(3), const(5))");
  const auto p3 = include(X(3));
  for (int i = 0; i < 200; ++i) {
    const BasicOpen b{gen::neighborhood(rng, p.lambda())};
    REQUIRE(member_basic(p3, b));
  }
}

TEST_CASE("property: similarity is an equivalence relation") {
  ExprGen gen(42);
  std::vector<SequenceExpr> pool;
  for (int i = 0; i < 120; ++i) pool.push_back(gen.expr(3));
  // Add near duplicates so that the relation is not trivially sparse.
  for (int i = 0; i < 60; ++i) pool.push_back(make_tail(static_cast<std::uint64_t>(i % 7), pool[static_cast<std::size_t>(i)]));
  for (const auto& a : pool) {
    REQUIRE(similar(a, a));
    for (const auto& b : pool) {
      const bool ab = similar(a, b);
      REQUIRE(ab == similar(b, a));
      if (!ab) continue;
      for (const auto& c : pool) {
        if (similar(b, c)) REQUIRE(similar(a, c));
      }
    }
  }
}

TEST_CASE("json forms of points and opens") {
  ExprGen gen(43);
  for (int i = 0; i < 300; ++i) {
    const auto p = limit_of(gen.expr(4));
    const auto back = limiter_point_from_json(nlohmann::json::parse(to_json(p).dump()));
    REQUIRE(back == p);
    REQUIRE(back.witness() == p.witness());
  }
  auto j = to_json(L("const(7)"));
  CHECK(j["classical"] == "7");
  CHECK(to_json(L("geom(1,-1)"))["classical"].is_null());
  j["lambda"] = "{8}";
  CHECK_THROWS_AS(limiter_point_from_json(j), DomainError);
  LimiterOpen o{{B("(-1,1)"), B("(5,+inf]")}};
  CHECK(to_json(o) == nlohmann::json::array({"(-1,1)", "(5,+inf]"}));
}

TEST_CASE("hyperspace examples") {
  CHECK(j_embed(X(5)).set == parse_closed_set("{5}"));
  CHECK(j_embed(pinf()).set == parse_closed_set("{+inf}"));
  CHECK(j_embed(X(0)) == j_embed(X(0)));
  CHECK(l_functional(parse_expr("const(7)")).set == parse_closed_set("{7}"));
  CHECK(l_functional(parse_expr("geom(1,-1)")).set == parse_closed_set("{-1,1}"));
  CHECK(l_functional(parse_expr("denseosc(0,1)")).set == parse_closed_set("[0,1]"));

  CHECK(universal_map(include(X(5))) == j_embed(X(5)));
  const auto e = parse_expr("interleave(const(3), const(5))");
  CHECK(universal_map(limit_of(e)) == l_functional(e));
  CHECK(preimage_basic({parse_open_set("(0,1)")}) == B("(0,1)"));
  CHECK(preimage_basic({OpenSet::whole()}).generator.is_whole());
  CHECK(preimage_basic({OpenSet::empty()}).generator.is_empty());
  CHECK(hyper_member(l_functional(e), {parse_open_set("(2,6)")}));
  CHECK_FALSE(hyper_member(l_functional(e), {parse_open_set("(2,4)")}));
}

TEST_CASE("property: preimage of a hyper basic is the matching basic") {
  gen::Rng rng(44);
  const auto corpus = builtin_corpus();
  for (int i = 0; i < 60; ++i) {
    const HyperBasicOpen v{gen::open_set(rng)};
    REQUIRE(j_preimage(v) == v.generator);
    const auto pre = preimage_basic(v);
    for (std::size_t k = 0; k < corpus.size(); k += 7) {
      const auto p = limit_of(corpus[k]);
      REQUIRE(member_basic(p, pre) == hyper_member(universal_map(p), v));
    }
  }
}

TEST_CASE("inclusion preimage equals the generator") {
  gen::Rng rng(45);
  for (int i = 0; i < 300; ++i) {
    const BasicOpen b{gen::open_set(rng)};
    REQUIRE(inclusion_preimage(b) == b.generator);
  }
}

TEST_CASE("verify suites pass on a reduced configuration") {
  VerifyConfig cfg;
  cfg.open_sets = 40;
  cfg.axiom1_pairs = 60;
  cfg.axiom5_pairs = 15;
  cfg.probes = 40;
  std::vector<SequenceExpr> corpus = corpus_leaves();
  const auto full = builtin_corpus();
  for (std::size_t k = 0; k < full.size(); k += 11) corpus.push_back(full[k]);
  const auto results = run_suite("all", corpus, cfg);
  CHECK(results.size() == 18);
  for (const auto& r : results) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.passed);
    CHECK(r.cases > 0);
  }
  CHECK_THROWS_AS(run_suite("nope", corpus, cfg), DomainError);
}
