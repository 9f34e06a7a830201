#pragma once

// The conformal (TKK) Lie algebra co = V* + str + V of a Jordan algebra V.
//
// A TkkElement stores its str component as a raw matrix. Membership in str
// (the span of all S_ab) is audited against an exact echelon basis of that
// span, computed once per algebra. V* is identified with V via the metric, so
// the covector part is stored as an Element w standing for Y_w = <w|.>.
//
// Brackets, extended bilinearly from
//   [X_u, X_v] = 0, [Y_u, Y_v] = 0, [X_u, Y_v] = -2 S_uv,
//   [S, X_z] = X_{S z}, [S, Y_z] = -Y_{S' z}   (S' the metric adjoint),
//   [S, T] = ST - TS.
// For S = S_uv these are X_{uvz}, -Y_{vuz} and the structure-algebra relation.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <memory>
#include <utility>
#include <vector>

#include "jkep/jordan.hpp"
#include "jkep/matrix.hpp"
#include "jkep/report.hpp"

namespace jkep {

struct TkkElement {
  Element<> y;  // Y_w component
  Endo s;       // str component
  Element<> x;  // X_z component

  friend bool operator==(const TkkElement& a, const TkkElement& b) {
    return a.y == b.y && a.s == b.s && a.x == b.x;
  }
  friend TkkElement operator+(const TkkElement& a, const TkkElement& b) {
    return {a.y + b.y, a.s + b.s, a.x + b.x};
  }
  friend TkkElement operator-(const TkkElement& a, const TkkElement& b) {
    return {a.y - b.y, a.s - b.s, a.x - b.x};
  }
  friend TkkElement operator*(const Rational& c, const TkkElement& a) {
    return {c * a.y, c * a.s, c * a.x};
  }
  bool is_zero() const { return y.is_zero() && s.is_zero() && x.is_zero(); }
};

inline SparseVector flatten(const Endo& m) { return to_sparse(m.data()); }

/// Echelon basis of span{S(e_a, e_b)} with generators visited in the given order.
inline SparseEchelon str_span(const AlgebraPtr& alg, const std::vector<std::size_t>& order) {
  SparseEchelon e;
  for (std::size_t a : order)
    for (std::size_t b : order) e.insert(flatten(S_op(basis_element(alg, a), basis_element(alg, b))));
  return e;
}

class TkkAlgebra {
 public:
  explicit TkkAlgebra(AlgebraPtr alg) : alg_(std::move(alg)) {
    std::vector<std::size_t> order(alg_->dim());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    str_ = str_span(alg_, order);
  }

  const AlgebraPtr& algebra() const { return alg_; }

  std::size_t str_dim() const { return str_.rank(); }
  std::size_t co_dim() const { return 2 * alg_->dim() + str_dim(); }

  bool in_str(const Endo& s) const { return str_.contains(flatten(s)); }

  TkkElement zero() const {
    const std::size_t d = alg_->dim();
    return {Element<>::zero(alg_), Endo(d, d), Element<>::zero(alg_)};
  }
  TkkElement X(const Element<>& z) const {
    check(z);
    auto t = zero();
    t.x = z;
    return t;
  }
  TkkElement Y(const Element<>& w) const {
    check(w);
    auto t = zero();
    t.y = w;
    return t;
  }
  TkkElement S(const Element<>& u, const Element<>& v) const {
    check(u);
    check(v);
    auto t = zero();
    t.s = S_op(u, v);
    return t;
  }
  TkkElement from_str(Endo s) const {
    auto t = zero();
    if (s.rows() != alg_->dim()) throw DimensionError("str component has wrong size");
    t.s = std::move(s);
    return t;
  }

  /// Lie bracket; throws InvariantViolation if either str component lies outside str.
  TkkElement bracket(const TkkElement& a, const TkkElement& b) const {
    validate(a);
    validate(b);
    return bracket_unchecked(a, b);
  }

  /// Lie bracket without the str-membership audit of the inputs.
  TkkElement bracket_unchecked(const TkkElement& a, const TkkElement& b) const {
    check(a.x);
    check(b.x);
    TkkElement r;
    r.x = apply(a.s, b.x) - apply(b.s, a.x);
    r.y = apply(metric_adjoint(b.s, *alg_), a.y) - apply(metric_adjoint(a.s, *alg_), b.y);
    r.s = commutator(a.s, b.s);
    if (!a.x.is_zero() && !b.y.is_zero()) r.s -= Rational(2) * S_op(a.x, b.y);
    if (!b.x.is_zero() && !a.y.is_zero()) r.s += Rational(2) * S_op(b.x, a.y);
    return r;
  }

  void validate(const TkkElement& a) const {
    check(a.x);
    check(a.y);
    if (!in_str(a.s)) throw InvariantViolation("str component is not in the span of the S_ab");
  }

  /// Random element with x, y parts random and s a sum of two random S_uv.
  TkkElement random(RationalSampler& rng) const {
    TkkElement t;
    t.y = random_element(alg_, rng);
    t.x = random_element(alg_, rng);
    t.s = S_op(random_element(alg_, rng), random_element(alg_, rng)) +
          S_op(random_element(alg_, rng), random_element(alg_, rng));
    return t;
  }

 private:
  void check(const Element<>& v) const {
    if (v.algebra() != alg_) throw DimensionError("element belongs to a different algebra");
  }

  AlgebraPtr alg_;
  SparseEchelon str_;
};

inline json to_json(const TkkElement& a) {
  json s = json::array();
  for (const auto& v : a.s.data()) s.push_back(to_pq(v));
  return json{{"y", to_json(a.y)}, {"s", std::move(s)}, {"x", to_json(a.x)}};
}

/// Rank of span{S(e_a, e_b)} with generators visited in a seeded random order
/// and the matrix entries permuted; an independent recount of str_dim.
inline std::size_t str_dim_reordered(const AlgebraPtr& alg, std::uint64_t seed) {
  const std::size_t d = alg->dim();
  std::vector<std::size_t> order(d), cols(d * d);
  for (std::size_t i = 0; i < d; ++i) order[i] = i;
  for (std::size_t i = 0; i < d * d; ++i) cols[i] = i;
  std::mt19937_64 eng(seed);
  std::shuffle(order.begin(), order.end(), eng);
  std::shuffle(cols.begin(), cols.end(), eng);
  SparseEchelon e;
  for (std::size_t a : order)
    for (std::size_t b : order) {
      const Endo s = S_op(basis_element(alg, a), basis_element(alg, b));
      std::vector<Rational> permuted(d * d);
      for (std::size_t k = 0; k < d * d; ++k) permuted[cols[k]] = s.data()[k];
      e.insert(to_sparse(permuted));
    }
  return e.rank();
}

/// Sum over cyclic permutations of [A, [B, C]] vanishes on random triples, and
/// the TKK component relations hold on random vectors.
inline Report jacobi_check(const TkkAlgebra& co, std::size_t trials, std::uint64_t seed) {
  const auto& alg = co.algebra();
  Report rep("tkk", alg->selector());
  rep.set_info("dim", alg->dim());
  rep.set_info("str_dim", co.str_dim());
  rep.set_info("co_dim", co.co_dim());

  const auto stream = stream_id("tkk");
  for (std::size_t t = 0; t < trials; ++t) {
    RationalSampler rng(seed, stream, t);
    const auto u = random_element(alg, rng), v = random_element(alg, rng);
    const auto z = random_element(alg, rng), w = random_element(alg, rng);
    auto vec_witness = [&] {
      return json{{"u", to_json(u)}, {"v", to_json(v)}, {"z", to_json(z)}, {"w", to_json(w)}};
    };

    rep.record("eq7.XX", co.bracket(co.X(u), co.X(v)).is_zero(), vec_witness);
    rep.record("eq7.YY", co.bracket(co.Y(u), co.Y(v)).is_zero(), vec_witness);
    rep.record("eq7.XY", co.bracket(co.X(u), co.Y(v)) == Rational(-2) * co.S(u, v), vec_witness);
    rep.record("eq7.SX", co.bracket(co.S(u, v), co.X(z)) == co.X(triple(u, v, z)), vec_witness);
    rep.record("eq7.SY", co.bracket(co.S(u, v), co.Y(z)) == Rational(-1) * co.Y(triple(v, u, z)), vec_witness);
    rep.record("eq7.SS",
               co.bracket(co.S(u, v), co.S(z, w)) == co.S(triple(u, v, z), w) - co.S(z, triple(v, u, w)),
               vec_witness);

    const TkkElement a = co.random(rng), b = co.random(rng), c = co.random(rng);
    auto triple_witness = [&] { return json{{"A", to_json(a)}, {"B", to_json(b)}, {"C", to_json(c)}}; };
    const TkkElement ab = co.bracket(a, b), ba = co.bracket(b, a);
    rep.record("tkk.antisymmetry", (ab + ba).is_zero() && co.bracket(a, a).is_zero(), triple_witness);

    const Rational r = rng.next_nonzero();
    rep.record("tkk.bilinear", co.bracket(a + r * c, b) == ab + r * co.bracket(c, b), triple_witness);

    const TkkElement bc = co.bracket_unchecked(b, c), ca = co.bracket_unchecked(c, a);
    rep.record("tkk.closure", co.in_str(ab.s) && co.in_str(bc.s) && co.in_str(ca.s), triple_witness);
    const TkkElement jac = co.bracket_unchecked(a, bc) + co.bracket_unchecked(b, ca) + co.bracket_unchecked(c, ab);
    rep.record("tkk.jacobi", jac.is_zero(), triple_witness);
  }
  return rep;
}

inline Report jacobi_check(const AlgebraPtr& alg, std::size_t trials, std::uint64_t seed) {
  return jacobi_check(TkkAlgebra(alg), trials, seed);
}

inline std::size_t str_dim(const AlgebraPtr& alg) { return TkkAlgebra(alg).str_dim(); }
inline std::size_t co_dim(const AlgebraPtr& alg) { return TkkAlgebra(alg).co_dim(); }

}  // namespace jkep
