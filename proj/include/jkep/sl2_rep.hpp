#pragma once

// The representation pi_nu of sl(2,R) on span{f_k = x^{nu/2+k} e^{-x}}.
//
// Each operator acts as i^p times a real tridiagonal recurrence,
//   O f_k = lower(k) f_{k-1} + diag(k) f_k + upper(k) f_{k+1},
// so every computation stays over the rationals. Phases are normalised to
// p in {0, 1} with the sign folded into the coefficients.
//
//   S f_k = f_{k+1} - (nu/2 + k) f_k
//   Y f_k = -i f_{k+1}
//   X f_k = i [k(k+nu-1) f_{k-1} - (nu+2k) f_k + f_{k+1}]
//
// E_+, E_- and h are formed from these as linear combinations.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "jkep/matrix.hpp"
#include "jkep/rational.hpp"
#include "jkep/report.hpp"

namespace jkep {

class NuParam {
 public:
  explicit NuParam(Rational nu) : nu_(std::move(nu)) {
    if (nu_ <= 0) throw ConfigurationError("nu must be positive, got " + to_string(nu_));
  }
  const Rational& value() const { return nu_; }
  friend bool operator==(const NuParam& a, const NuParam& b) { return a.nu_ == b.nu_; }
  friend bool operator!=(const NuParam& a, const NuParam& b) { return !(a == b); }

 private:
  Rational nu_;
};

/// Gaussian rational re + i im.
struct GaussRational {
  Rational re, im;
  friend bool operator==(const GaussRational& a, const GaussRational& b) { return a.re == b.re && a.im == b.im; }
  friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
};

inline json to_json(const GaussRational& z) { return json{{"re", to_pq(z.re)}, {"im", to_pq(z.im)}}; }

/// i^p (c_0 f_0 + c_1 f_1 + ...), trailing zeros trimmed.
class DomainVector {
 public:
  DomainVector(NuParam nu, std::vector<Rational> coeffs, int phase = 0) : nu_(std::move(nu)), c_(std::move(coeffs)) {
    phase = ((phase % 4) + 4) % 4;
    if (phase >= 2) {
      for (auto& x : c_) x = -x;
      phase -= 2;
    }
    phase_ = phase;
    normalise();
  }

  static DomainVector basis(const NuParam& nu, std::size_t k) {
    std::vector<Rational> c(k + 1);
    c[k] = 1;
    return DomainVector(nu, std::move(c));
  }

  const NuParam& nu() const { return nu_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  int phase() const { return phase_; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

  friend DomainVector operator+(const DomainVector& a, const DomainVector& b) { return add(a, b, Rational(1)); }
  friend DomainVector operator-(const DomainVector& a, const DomainVector& b) { return add(a, b, Rational(-1)); }
  friend DomainVector operator*(const Rational& s, DomainVector v) {
    for (auto& x : v.c_) x *= s;
    v.normalise();
    return v;
  }
  /// Multiplication by i^p.
  DomainVector times_i(int p) const { return DomainVector(nu_, c_, phase_ + p); }

  friend bool operator==(const DomainVector& a, const DomainVector& b) {
    return a.nu_ == b.nu_ && a.phase_ == b.phase_ && a.c_ == b.c_;
  }

  json to_json() const {
    json c = json::array();
    for (const auto& x : c_) c.push_back(to_pq(x));
    return json{{"nu", to_pq(nu_.value())}, {"phase", phase_}, {"coeffs", std::move(c)}};
  }

 private:
  static DomainVector add(const DomainVector& a, const DomainVector& b, const Rational& sb) {
    if (a.nu_ != b.nu_) throw DimensionError("domain vectors for different nu");
    if (a.is_zero()) return sb * b;
    if (b.is_zero()) return a;
    if (a.phase_ != b.phase_) throw InvariantViolation("sum of real and imaginary vectors is not tracked");
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + sb * b.coeff(k);
    return DomainVector(a.nu_, std::move(c), a.phase_);
  }

  void normalise() {
    while (!c_.empty() && jkep::is_zero(c_.back())) c_.pop_back();
    if (c_.empty()) phase_ = 0;
  }

  NuParam nu_;
  std::vector<Rational> c_;
  int phase_ = 0;
};

enum class RepKind { S, X, Y, Eplus, Eminus, h, Custom };

inline std::string kind_name(RepKind k) {
  switch (k) {
    case RepKind::S: return "S";
    case RepKind::X: return "X";
    case RepKind::Y: return "Y";
    case RepKind::Eplus: return "E+";
    case RepKind::Eminus: return "E-";
    case RepKind::h: return "h";
    case RepKind::Custom: return "custom";
  }
  return "?";
}

class RepOperator {
 public:
  using Coeff = std::function<Rational(std::size_t)>;

  RepOperator(RepKind kind, NuParam nu, int phase, Coeff lower, Coeff diag, Coeff upper)
      : kind_(kind), nu_(std::move(nu)), phase_(phase), lower_(std::move(lower)), diag_(std::move(diag)),
        upper_(std::move(upper)) {}

  RepKind kind() const { return kind_; }
  const NuParam& nu() const { return nu_; }
  int phase() const { return phase_; }
  Rational lower(std::size_t k) const { return lower_(k); }
  Rational diag(std::size_t k) const { return diag_(k); }
  Rational upper(std::size_t k) const { return upper_(k); }

  /// sum_t c_t i^{p_t} O_t; all terms must land in the same phase class.
  static RepOperator combine(RepKind kind, const std::vector<std::tuple<Rational, int, RepOperator>>& terms) {
    if (terms.empty()) throw DimensionError("empty operator combination");
    const NuParam nu = std::get<2>(terms.front()).nu();
    struct Part {
      Rational c;
      RepOperator op;
    };
    std::vector<Part> parts;
    int phase = -1;
    for (const auto& [c, p, op] : terms) {
      if (op.nu() != nu) throw DimensionError("operators for different nu");
      int q = ((p + op.phase()) % 4 + 4) % 4;
      Rational s = c;
      if (q >= 2) {
        s = -s;
        q -= 2;
      }
      if (phase >= 0 && q != phase) throw InvariantViolation("operator combination mixes real and imaginary parts");
      phase = q;
      parts.push_back({s, op});
    }
    auto sum = [parts](Rational (RepOperator::*f)(std::size_t) const) {
      return [parts, f](std::size_t k) {
        Rational acc = 0;
        for (const auto& pt : parts) acc += pt.c * (pt.op.*f)(k);
        return acc;
      };
    };
    return RepOperator(kind, nu, phase, sum(&RepOperator::lower), sum(&RepOperator::diag), sum(&RepOperator::upper));
  }

 private:
  RepKind kind_;
  NuParam nu_;
  int phase_;
  Coeff lower_, diag_, upper_;
};

inline RepOperator rep_S(const NuParam& nu) {
  const Rational s = nu.value() / 2;
  return RepOperator(
      RepKind::S, nu, 0, [](std::size_t) { return Rational(0); },
      [s](std::size_t k) { return Rational(-(s + Rational(k))); }, [](std::size_t) { return Rational(1); });
}

inline RepOperator rep_Y(const NuParam& nu) {
  return RepOperator(
      RepKind::Y, nu, 1, [](std::size_t) { return Rational(0); }, [](std::size_t) { return Rational(0); },
      [](std::size_t) { return Rational(-1); });
}

inline RepOperator rep_X(const NuParam& nu) {
  const Rational v = nu.value();
  return RepOperator(
      RepKind::X, nu, 1, [v](std::size_t k) { return Rational(Rational(k) * (Rational(k) + v - 1)); },
      [v](std::size_t k) { return Rational(-(v + Rational(2 * k))); }, [](std::size_t) { return Rational(1); });
}

/// E_+- = (i/2)(X - Y) -+ S
inline RepOperator rep_Eplus(const NuParam& nu) {
  return RepOperator::combine(RepKind::Eplus, {{Rational(1, 2), 1, rep_X(nu)},
                                               {Rational(-1, 2), 1, rep_Y(nu)},
                                               {Rational(-1), 0, rep_S(nu)}});
}
inline RepOperator rep_Eminus(const NuParam& nu) {
  return RepOperator::combine(RepKind::Eminus, {{Rational(1, 2), 1, rep_X(nu)},
                                                {Rational(-1, 2), 1, rep_Y(nu)},
                                                {Rational(1), 0, rep_S(nu)}});
}
/// h = (i/2)(X + Y)
inline RepOperator rep_h(const NuParam& nu) {
  return RepOperator::combine(RepKind::h, {{Rational(1, 2), 1, rep_X(nu)}, {Rational(1, 2), 1, rep_Y(nu)}});
}

inline RepOperator rep_operator(RepKind kind, const NuParam& nu) {
  switch (kind) {
    case RepKind::S: return rep_S(nu);
    case RepKind::X: return rep_X(nu);
    case RepKind::Y: return rep_Y(nu);
    case RepKind::Eplus: return rep_Eplus(nu);
    case RepKind::Eminus: return rep_Eminus(nu);
    case RepKind::h: return rep_h(nu);
    case RepKind::Custom: break;
  }
  throw ConfigurationError("no standard operator of kind " + kind_name(kind));
}

inline DomainVector apply(const RepOperator& op, const DomainVector& v) {
  if (op.nu() != v.nu()) throw DimensionError("operator and vector have different nu");
  const auto& c = v.coeffs();
  std::vector<Rational> out(c.size() + 1);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (is_zero(c[k])) continue;
    if (k > 0) out[k - 1] += c[k] * op.lower(k);
    out[k] += c[k] * op.diag(k);
    out[k + 1] += c[k] * op.upper(k);
  }
  return DomainVector(v.nu(), std::move(out), v.phase() + op.phase());
}

/// <f_j, f_k> / <f_0, f_0> = (nu)_{j+k} / 2^{j+k}, for any rational nu.
inline Rational gram(const Rational& nu, std::size_t j, std::size_t k) {
  Rational g = 1;
  for (std::size_t m = 0; m < j + k; ++m) g *= (nu + Rational(m)) / 2;
  return g;
}

inline Matrix<Rational> gram_matrix(const Rational& nu, std::size_t degree) {
  Matrix<Rational> g(degree + 1, degree + 1);
  for (std::size_t j = 0; j <= degree; ++j)
    for (std::size_t k = 0; k <= degree; ++k) g(j, k) = gram(nu, j, k);
  return g;
}

/// Sesquilinear, conjugate-linear in the first slot.
inline GaussRational inner(const DomainVector& a, const DomainVector& b) {
  if (a.nu() != b.nu()) throw DimensionError("inner product across different nu");
  Rational r = 0;
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  for (std::size_t j = 0; j < ca.size(); ++j)
    for (std::size_t k = 0; k < cb.size(); ++k)
      if (!is_zero(ca[j]) && !is_zero(cb[k])) r += ca[j] * cb[k] * gram(a.nu().value(), j, k);
  // conj(i^pa) i^pb = i^(pb - pa)
  switch (((b.phase() - a.phase()) % 4 + 4) % 4) {
    case 0: return {r, 0};
    case 1: return {0, r};
    case 2: return {-r, 0};
    default: return {0, -r};
  }
}

namespace detail {
inline std::function<json()> rep_witness(const Rational& nu, std::size_t j, std::size_t k = 0) {
  return [nu, j, k] { return json{{"nu", to_pq(nu)}, {"j", j}, {"k", k}}; };
}
}  // namespace detail

/// [S,X] = X, [S,Y] = -Y, [X,Y] = -2S on every f_k with k <= degree.
inline void commutator_check(Report& rep, const NuParam& nu, std::size_t degree) {
  if (degree < 1) throw ConfigurationError("degree must be at least 1");
  const auto S = rep_S(nu), X = rep_X(nu), Y = rep_Y(nu);
  auto br = [](const RepOperator& a, const RepOperator& b, const DomainVector& v) {
    return apply(a, apply(b, v)) - apply(b, apply(a, v));
  };
  for (std::size_t k = 0; k <= degree; ++k) {
    const auto f = DomainVector::basis(nu, k);
    const auto w = detail::rep_witness(nu.value(), k);
    rep.record("sl2.SX", br(S, X, f) == apply(X, f), w);
    rep.record("sl2.SY", br(S, Y, f) == Rational(-1) * apply(Y, f), w);
    rep.record("sl2.XY", br(X, Y, f) == Rational(-2) * apply(S, f), w);
  }
}

inline Report commutator_check(const NuParam& nu, std::size_t degree) {
  Report rep("rep", "nu=" + to_pq(nu.value()));
  commutator_check(rep, nu, degree);
  return rep;
}

/// A unitary module needs iS, iX, iY hermitian, i.e. <O f_j, f_k> = -<f_j, O f_k>.
/// Consequently h is hermitian and E_+ and E_- are mutually adjoint.
inline void hermiticity_check(Report& rep, const NuParam& nu, std::size_t degree) {
  if (degree < 1) throw ConfigurationError("degree must be at least 1");
  const std::vector<std::pair<std::string, RepOperator>> skew = {
      {"hermitian.iS", rep_S(nu)}, {"hermitian.iX", rep_X(nu)}, {"hermitian.iY", rep_Y(nu)}};
  const auto h = rep_h(nu), Ep = rep_Eplus(nu), Em = rep_Eminus(nu);
  std::vector<DomainVector> f;
  for (std::size_t k = 0; k <= degree; ++k) f.push_back(DomainVector::basis(nu, k));
  for (std::size_t j = 0; j <= degree; ++j)
    for (std::size_t k = 0; k <= degree; ++k) {
      const auto w = detail::rep_witness(nu.value(), j, k);
      for (const auto& [name, op] : skew) rep.record(name, inner(apply(op, f[j]), f[k]) == -inner(f[j], apply(op, f[k])), w);
      rep.record("hermitian.h", inner(apply(h, f[j]), f[k]) == inner(f[j], apply(h, f[k])), w);
      rep.record("adjoint.Eplus_Eminus", inner(apply(Ep, f[j]), f[k]) == inner(f[j], apply(Em, f[k])), w);
    }
}

inline Report hermiticity_check(const NuParam& nu, std::size_t degree) {
  Report rep("rep", "nu=" + to_pq(nu.value()));
  hermiticity_check(rep, nu, degree);
  return rep;
}

/// E_- f_0 = 0, h E_+^m f_0 = (nu/2 + m) E_+^m f_0, and the E_+^m f_0 are independent.
inline void lowest_weight_module_check(Report& rep, const NuParam& nu, std::size_t depth) {
  if (depth < 1) throw ConfigurationError("depth must be at least 1");
  const auto h = rep_h(nu), Ep = rep_Eplus(nu), Em = rep_Eminus(nu);
  const auto f0 = DomainVector::basis(nu, 0);
  const Rational s = nu.value() / 2;
  const auto w0 = detail::rep_witness(nu.value(), 0);
  rep.record("lowest.Eminus_f0", apply(Em, f0).is_zero(), w0);
  rep.record("lowest.h_f0", apply(h, f0) == s * f0, w0);

  const auto EmEp = apply(Em, apply(Ep, f0));
  rep.record("lowest.EmEp_f0", EmEp.coeffs().size() <= 1 && EmEp.phase() == 0, w0);

  std::vector<DomainVector> ladder{f0};
  for (std::size_t m = 1; m <= depth; ++m) ladder.push_back(apply(Ep, ladder.back()));
  std::vector<std::vector<Rational>> span;
  for (std::size_t m = 0; m <= depth; ++m) {
    const auto& v = ladder[m];
    rep.record("lowest.h_ladder", apply(h, v) == (s + Rational(m)) * v, detail::rep_witness(nu.value(), m));
    span.emplace_back();
    for (std::size_t k = 0; k <= depth; ++k) span.back().push_back(v.coeff(k));
  }
  rep.record("lowest.ladder_rank", exact_rank(span) == depth + 1, w0);
}

inline Report lowest_weight_module_check(const NuParam& nu, std::size_t depth) {
  Report rep("rep", "nu=" + to_pq(nu.value()));
  lowest_weight_module_check(rep, nu, depth);
  return rep;
}

/// Leading principal minors of the Gram matrix of f_0..f_degree all positive.
inline bool gram_positive_definite(const Rational& nu, std::size_t degree) {
  return is_positive_definite(gram_matrix(nu, degree));
}

/// Full audit used by `rep check`: commutators, hermiticity, lowest weight,
/// Gram positivity and the nu / 2 - nu distinction.
inline Report rep_check(const NuParam& nu, std::size_t degree) {
  Report rep("rep", "nu=" + to_pq(nu.value()));
  commutator_check(rep, nu, degree);
  hermiticity_check(rep, nu, degree);
  lowest_weight_module_check(rep, nu, degree);
  const auto w = detail::rep_witness(nu.value(), degree);
  rep.record("gram.positive_definite", gram_positive_definite(nu.value(), degree), w);
  // pi_nu and pi_{2-nu} share the differential expression of X but not the
  // domain; their X recurrences differ at k = 1 unless nu = 1.
  const Rational mirror = 2 - nu.value();
  if (nu.value() != 1) {
    // k(k + nu - 1) at k = 1 for nu and for 2 - nu
    rep.record("distinct.X_recurrence", rep_X(nu).lower(1) != mirror, w);
  }
  rep.set_info("nu", to_pq(nu.value()));
  rep.set_info("degree", degree);
  return rep;
}

}  // namespace jkep
