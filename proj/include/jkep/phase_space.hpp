#pragma once

// Classical observables on TV = V x V with coordinates (x, pi).
//
// The canonical basis is orthogonal with Gram diagonal G, so in its
// coordinates the symplectic structure reads {x^a, pi^b} = delta^{ab} / G_a.
// Observables are quotients of polynomials; the coordinate ring P is either
// Polynomial (exact normal forms) or Jet (exact Taylor data at a rational
// phase point, used where full normal forms are too large).

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "jkep/jordan.hpp"
#include "jkep/polynomial.hpp"

namespace jkep {

template <class P>
class Observable {
 public:
  Observable() : num_(Rational(0)), den_(Rational(1)) {}
  Observable(P num) : num_(std::move(num)), den_(Rational(1)) {}  // NOLINT: polynomials are observables
  Observable(P num, P den) : num_(std::move(num)), den_(std::move(den)) {
    if (jkep::is_zero(den_)) throw DimensionError("observable with zero denominator");
  }

  const P& num() const { return num_; }
  const P& den() const { return den_; }

  friend Observable operator+(const Observable& a, const Observable& b) { return combine(a, b, Rational(1)); }
  friend Observable operator-(const Observable& a, const Observable& b) { return combine(a, b, Rational(-1)); }
  friend Observable operator*(const Observable& a, const Observable& b) {
    if (is_one(a.den_)) return Observable(a.num_ * b.num_, b.den_);
    if (is_one(b.den_)) return Observable(a.num_ * b.num_, a.den_);
    return Observable(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Observable operator*(const Rational& s, Observable a) {
    a.num_ *= s;
    return a;
  }
  friend Observable operator/(const Observable& a, const Observable& b) {
    if (jkep::is_zero(b.num_)) throw DimensionError("division by the zero observable");
    return Observable(a.num_ * b.den_, a.den_ * b.num_);
  }

  /// Cross-multiplied test num_a den_b == num_b den_a.
  friend bool operator==(const Observable& a, const Observable& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return jkep::is_zero(a.num_ * b.den_ - b.num_ * a.den_);
  }

  bool is_zero() const { return jkep::is_zero(num_); }

  static bool is_one(const P& p) { return p == P(Rational(1)); }

 private:
  static Observable combine(const Observable& a, const Observable& b, const Rational& sb) {
    if (a.den_ == b.den_) return Observable(a.num_ + b.num_ * sb, a.den_);
    if (is_one(b.den_)) return Observable(a.num_ + (b.num_ * a.den_) * sb, a.den_);
    if (is_one(a.den_)) return Observable(a.num_ * b.den_ + b.num_ * sb, b.den_);
    return Observable(a.num_ * b.den_ + (b.num_ * a.den_) * sb, a.den_ * b.den_);
  }

  P num_;
  P den_;
};

/// Coordinates, Poisson structure and the named observables on TV.
template <class P>
class PhaseModel {
 public:
  /// coords holds 2 dim entries: x^1..x^dim then pi^1..pi^dim.
  PhaseModel(AlgebraPtr alg, std::vector<P> coords) : alg_(std::move(alg)) {
    const std::size_t d = alg_->dim();
    if (2 * d > kMaxVars) throw DimensionError("algebra too large for phase-space variables");
    if (coords.size() != 2 * d) throw DimensionError("phase-space coordinate count");
    std::vector<P> xs(coords.begin(), coords.begin() + static_cast<std::ptrdiff_t>(d));
    std::vector<P> ps(coords.begin() + static_cast<std::ptrdiff_t>(d), coords.end());
    x_ = Element<P>(alg_, std::move(xs));
    pi_ = Element<P>(alg_, std::move(ps));
    for (const auto& g : alg_->gram()) weight_.push_back(1 / g);
    e_ = unit_element(alg_);
    Ye_ = moment_Y(e_);
    Xe_ = moment_X(e_);
  }

  const AlgebraPtr& algebra() const { return alg_; }
  std::size_t dim() const { return alg_->dim(); }
  const Element<P>& position() const { return x_; }
  const Element<P>& momentum() const { return pi_; }

  /// {f, g} = sum_a (1/G_a) (df/dx^a dg/dpi^a - df/dpi^a dg/dx^a)
  P poisson(const P& f, const P& g) const {
    const std::size_t d = dim();
    P acc(Rational(0));
    for (std::size_t a = 0; a < d; ++a) {
      const P fx = f.derivative(a), gp = g.derivative(d + a);
      const P fp = f.derivative(d + a), gx = g.derivative(a);
      P term(Rational(0));
      bool any = false;
      if (!jkep::is_zero(fx) && !jkep::is_zero(gp)) {
        term = fx * gp;
        any = true;
      }
      if (!jkep::is_zero(fp) && !jkep::is_zero(gx)) {
        term = any ? term - fp * gx : -(fp * gx);
        any = true;
      }
      if (any) acc += term * weight_[a];
    }
    return acc;
  }

  /// Quotient-rule bracket of rational functions.
  Observable<P> poisson(const Observable<P>& f, const Observable<P>& g) const {
    const P& a = f.num();
    const P& b = f.den();
    const P& c = g.num();
    const P& d = g.den();
    const bool b1 = Observable<P>::is_one(b), d1 = Observable<P>::is_one(d);
    if (b1 && d1) return Observable<P>(poisson(a, c));
    if (b1) return Observable<P>(poisson(a, c) * d - c * poisson(a, d), d * d);
    if (d1) return Observable<P>(poisson(a, c) * b - a * poisson(b, c), b * b);
    if (b == d) {
      // {a/b, c/b} = ({a,c} b - a {b,c} - c {a,b}) / b^3
      return Observable<P>(poisson(a, c) * b - a * poisson(b, c) - c * poisson(a, b), b * b * b);
    }
    P n = poisson(a, c) * b * d - a * poisson(b, c) * d - c * poisson(a, d) * b + a * c * poisson(b, d);
    return Observable<P>(std::move(n), b * b * d * d);
  }

  // Moment functions.

  /// S_uv := <S_uv(x) | pi>
  Observable<P> moment_S(const Element<>& u, const Element<>& v) const { return moment_of(S_op(u, v)); }
  /// Moment function <M x | pi> of an arbitrary endomorphism.
  Observable<P> moment_of(const Endo& m) const { return Observable<P>(inner(apply(m, x_), pi_)); }
  /// X_u := <x | {pi u pi}>
  Observable<P> moment_X(const Element<>& u) const {
    return Observable<P>(inner(x_, triple(pi_, lift<P>(u), pi_)));
  }
  /// Y_v := <x | v>
  Observable<P> moment_Y(const Element<>& v) const { return Observable<P>(inner(x_, lift<P>(v))); }

  // Kepler observables.

  /// H = (X_e / 2 - 1) / Y_e
  Observable<P> hamiltonian() const {
    return Observable<P>(Xe_.num() * Rational(1, 2) - P(Rational(1)), Ye_.num());
  }

  /// H = <x | pi^2> / (2 r) - 1 / r with r = <x | e> and pi^2 the Jordan square.
  Observable<P> hamiltonian_explicit() const {
    const P r = inner(x_, lift<P>(e_));
    return Observable<P>(inner(x_, mul(pi_, pi_)) * Rational(1, 2) - P(Rational(1)), r);
  }

  /// A_u = (X_u - Y_u X_e / Y_e) / 2 + Y_u / Y_e
  Observable<P> lenz(const Element<>& u) const {
    const P xu = moment_X(u).num(), yu = moment_Y(u).num();
    const P& ye = Ye_.num();
    const P& xe = Xe_.num();
    P n = (xu * ye - yu * xe) * Rational(1, 2) + yu;
    return Observable<P>(std::move(n), ye);
  }

  /// A_u := {L_u, Y_e^2 H} / Y_e
  Observable<P> lenz_from_bracket(const Element<>& u) const {
    const Observable<P> ye2h = Ye_ * Ye_ * hamiltonian();
    return poisson(angular(u), ye2h) / Ye_;
  }

  /// L_u realised as the moment function of L_u = S_ue.
  Observable<P> angular(const Element<>& u) const { return moment_of(L_op(u)); }

  /// L_{u,v} := {L_u, L_v}
  Observable<P> angular_pair(const Element<>& u, const Element<>& v) const {
    return poisson(angular(u), angular(v));
  }

  const Observable<P>& Y_e() const { return Ye_; }
  const Observable<P>& X_e() const { return Xe_; }

 private:
  AlgebraPtr alg_;
  Element<P> x_, pi_;
  Element<> e_;
  std::vector<Rational> weight_;
  Observable<P> Ye_, Xe_;
};

/// Model with polynomial coordinates x^a = var(a), pi^a = var(dim + a).
inline PhaseModel<Polynomial> exact_model(const AlgebraPtr& alg) {
  std::vector<Polynomial> c;
  for (std::size_t i = 0; i < 2 * alg->dim(); ++i) c.push_back(Polynomial::variable(i));
  return PhaseModel<Polynomial>(alg, std::move(c));
}

/// Model of order-`order` jets at the phase point (x0, pi0).
inline PhaseModel<Jet> jet_model(const Element<>& x0, const Element<>& pi0, int order) {
  const auto& alg = x0.algebra();
  x0.check_same(pi0);
  const std::size_t d = alg->dim();
  std::vector<Jet> c;
  for (std::size_t i = 0; i < d; ++i) c.emplace_back(Polynomial(x0[i]) + Polynomial::variable(i), order);
  for (std::size_t i = 0; i < d; ++i) c.emplace_back(Polynomial(pi0[i]) + Polynomial::variable(d + i), order);
  return PhaseModel<Jet>(alg, std::move(c));
}

/// Variable names x1.., p1.. for printing polynomials.
inline std::vector<std::string> phase_variable_names(std::size_t dim) {
  std::vector<std::string> n;
  for (std::size_t i = 0; i < dim; ++i) n.push_back("x" + std::to_string(i + 1));
  for (std::size_t i = 0; i < dim; ++i) n.push_back("p" + std::to_string(i + 1));
  return n;
}

}  // namespace jkep
