#pragma once

// Randomised exact audits of the Jordan-algebra layer.

#include <cstdint>
#include <string>

#include "jkep/jordan.hpp"
#include "jkep/report.hpp"

namespace jkep {

/// Checks [S_ab, S_cd] = S_{{abc}d} - S_{c{bad}} exactly on random quadruples.
inline Report verify_structure_relation(const AlgebraPtr& alg, std::size_t trials, std::uint64_t seed) {
  Report rep("structure-relation", alg->selector());
  const auto stream = stream_id("eq6");
  for (std::size_t t = 0; t < trials; ++t) {
    RationalSampler rng(seed, stream, t);
    const auto a = random_element(alg, rng), b = random_element(alg, rng);
    const auto c = random_element(alg, rng), d = random_element(alg, rng);
    const Endo lhs = commutator(S_op(a, b), S_op(c, d));
    const Endo rhs = S_op(triple(a, b, c), d) - S_op(c, triple(b, a, d));
    rep.record("eq6", lhs == rhs, [&] {
      return json{{"a", to_json(a)}, {"b", to_json(b)}, {"c", to_json(c)}, {"d", to_json(d)}};
    });
  }
  return rep;
}

/// Jordan axioms, metric properties and the S-operator identities on random data.
inline Report verify_jordan(const AlgebraPtr& alg, std::size_t trials, std::uint64_t seed) {
  Report rep("jordan", alg->selector());
  const std::size_t d = alg->dim();
  const auto e = unit_element(alg);
  const Endo id = Endo::identity(d);

  rep.record("metric.unit_norm", inner(e, e) == 1);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Rational t = trace_form(basis_element(alg, i), basis_element(alg, j));
      const bool ok = (i == j) ? t == alg->gram()[i] && sgn(t) > 0 : is_zero(t);
      rep.record("metric.orthogonal_basis", ok, [&] { return json{{"i", i}, {"j", j}, {"value", to_pq(t)}}; });
    }
  rep.record("str.See", S_op(e, e) == id);

  const auto stream = stream_id("jordan");
  for (std::size_t t = 0; t < trials; ++t) {
    RationalSampler rng(seed, stream, t);
    const auto a = random_element(alg, rng), b = random_element(alg, rng), c = random_element(alg, rng);
    auto witness = [&] { return json{{"a", to_json(a)}, {"b", to_json(b)}, {"c", to_json(c)}}; };

    rep.record("jordan.commutative", mul(a, b) == mul(b, a), witness);
    const auto a2 = mul(a, a);
    rep.record("jordan.identity", mul(a, mul(a2, b)) == mul(a2, mul(a, b)), witness);
    rep.record("jordan.unit", mul(e, a) == a, witness);
    rep.record("metric.self_adjoint", inner(mul(a, b), c) == inner(b, mul(a, c)), witness);
    rep.record("metric.trace_form", inner(a, b) == trace_form(a, b), witness);
    rep.record("triple.symmetric", triple(a, b, c) == triple(c, b, a), witness);
    rep.record("triple.matrix", apply(S_op(a, b), c) == triple(a, b, c), witness);
    rep.record("str.Sae", S_op(a, e) == L_op(a) && S_op(e, a) == L_op(a), witness);
    rep.record("str.adjoint", metric_adjoint(S_op(a, b), *alg) == S_op(b, a), witness);
  }
  return rep;
}

}  // namespace jkep
