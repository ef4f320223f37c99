#include "limiter/corpus.hpp"

#include "limiter/sequence_parser.hpp"

namespace limiter {

namespace {

Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Polynomial poly(std::initializer_list<long> low_to_high) {
  std::vector<Integer> c;
  for (long v : low_to_high) c.emplace_back(v);
  return Polynomial(std::move(c));
}

struct AffineParams {
  Rational scale;
  Rational offset;
};

}  // namespace

std::vector<SequenceExpr> corpus_leaves() {
  return {
      make_const(q(0)),
      make_const(q(-1)),
      make_const(q(3)),
      make_const(q(1, 2)),
      make_arith(q(0), q(1)),
      make_arith(q(0), q(-1)),
      make_arith(q(1), q(-1, 2)),
      make_arith(q(2), q(0)),
      make_geom(q(1), q(1, 2)),
      make_geom(q(1), q(-1)),
      make_geom(q(-1), q(2)),
      make_geom(q(1), q(-3, 2)),
      make_geom(q(0), q(5)),
      make_geom(q(2), q(1)),
      make_geom(q(3), q(-1, 3)),
      make_ratio(poly({0, 1}), poly({1, 1})),           // n/(n+1)
      make_ratio(poly({1, 0, 2}), poly({-3, 0, 1})),    // (2n^2+1)/(n^2-3)
      make_ratio(poly({0, 0, 1}), poly({1, 5})),        // n^2/(5n+1)
      make_ratio(poly({1}), poly({0, -2, 1})),          // 1/(n^2-2n)
      make_ratio(poly({0, 1, 0, -1}), poly({1, 0, 2})), // (n-n^3)/(2n^2+1)
      make_dense_osc(q(0), q(1)),
      make_dense_osc(q(-2), q(-1, 2)),
      make_dense_osc(q(1), q(1)),
      make_enum_rationals(),
  };
}

std::vector<SequenceExpr> builtin_corpus() {
  const auto leaves = corpus_leaves();
  const std::vector<AffineParams> affine_params = {{q(2), q(1)}, {q(-1, 2), q(0)}, {q(3), q(-5, 2)}};

  std::vector<SequenceExpr> depth2;
  depth2.push_back(make_affine(q(0), q(7), leaves.front()));
  for (const auto& leaf : leaves) {
    for (std::size_t i = 0; i < 2; ++i) depth2.push_back(make_affine(affine_params[i].scale, affine_params[i].offset, leaf));
    depth2.push_back(make_tail(3, leaf));
  }
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    for (std::size_t j = i + 1; j < leaves.size(); ++j) depth2.push_back(make_interleave({leaves[i], leaves[j]}));
  }
  for (std::size_t i = 0; i + 2 < leaves.size(); ++i) {
    depth2.push_back(make_interleave({leaves[i], leaves[i + 1], leaves[i + 2]}));
  }

  std::vector<SequenceExpr> depth3;
  for (std::size_t k = 0; k < depth2.size(); ++k) {
    const auto& d = depth2[k];
    const auto& p = affine_params[k % affine_params.size()];
    depth3.push_back(make_affine(p.scale, p.offset, d));
    depth3.push_back(make_tail(k % 5 + 1, d));
    depth3.push_back(make_interleave({d, leaves[(k * 7) % leaves.size()]}));
  }

  std::vector<SequenceExpr> all = leaves;
  all.insert(all.end(), depth2.begin(), depth2.end());
  all.insert(all.end(), depth3.begin(), depth3.end());
  return all;
}

std::string corpus_manifest() {
  const auto corpus = builtin_corpus();
  std::string out = "# Built-in verification corpus: depth-3 closure of the grammar.\n# " +
                    std::to_string(corpus.size()) + " expressions, one per line.\n";
  for (const auto& e : corpus) out += print_expr(e) + "\n";
  return out;
}

}  // namespace limiter
