#pragma once

// Simple euclidean Jordan algebras as exact structure constants.
//
// Every catalogued algebra uses a basis that is orthogonal (not orthonormal)
// for the normalized trace form <a|b> = (1/dim) Tr L_{ab}, so the Gram matrix
// is diagonal with rational entries:
//
//   real        {1}
//   spin:n      (1, 0) and (0, e_i), i = 1..n
//   herm-*:n    E_ii, then for each i < j and each unit u of the coefficient
//               algebra the hermitian unit u E_ij + conj(u) E_ji
//   albert      herm over the octonions with n = 3
//
// Element<T> is templated on its coordinate ring so the same product, trace
// form and triple product also run over polynomial coordinates (phase space).

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jkep/cayley_dickson.hpp"
#include "jkep/matrix.hpp"
#include "jkep/rational.hpp"

namespace jkep {

enum class Family { Real, Spin, HermReal, HermComplex, HermQuat, Albert };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::Real: return "real";
    case Family::Spin: return "spin";
    case Family::HermReal: return "herm-r";
    case Family::HermComplex: return "herm-c";
    case Family::HermQuat: return "herm-h";
    case Family::Albert: return "albert";
  }
  return "?";
}

struct ProductTerm {
  std::size_t index;
  Rational coeff;
};

/// One simple euclidean Jordan algebra: structure constants, unit and Gram diagonal.
class Algebra {
 public:
  Family family() const { return family_; }
  /// Family parameter; 0 for real and albert.
  int n() const { return n_; }
  std::size_t dim() const { return dim_; }

  /// Selector string accepted by parse_algebra, e.g. "spin:3".
  std::string selector() const {
    if (family_ == Family::Real || family_ == Family::Albert) return family_name(family_);
    return family_name(family_) + ":" + std::to_string(n_);
  }

  /// e_a o e_b as a sparse list of (gamma, c[a][b][gamma]).
  const std::vector<ProductTerm>& product(std::size_t a, std::size_t b) const {
    return table_[a * dim_ + b];
  }

  Rational structure_constant(std::size_t a, std::size_t b, std::size_t g) const {
    for (const auto& t : product(a, b))
      if (t.index == g) return t.coeff;
    return 0;
  }

  /// G[a] = <e_a|e_a>.
  const std::vector<Rational>& gram() const { return gram_; }

  /// Coordinates of the unit element.
  const std::vector<Rational>& unit_coords() const { return unit_; }

  /// Number of nonzero structure constants.
  std::size_t nonzero_constants() const {
    std::size_t k = 0;
    for (const auto& l : table_) k += l.size();
    return k;
  }

  /// Human-readable label of basis element a.
  const std::string& basis_label(std::size_t a) const { return labels_[a]; }

 private:
  friend class AlgebraBuilder;

  Family family_ = Family::Real;
  int n_ = 0;
  std::size_t dim_ = 0;
  std::vector<std::vector<ProductTerm>> table_;
  std::vector<Rational> gram_;
  std::vector<Rational> unit_;
  std::vector<std::string> labels_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

inline std::size_t expected_dim(Family f, int n) {
  const auto m = static_cast<std::size_t>(n);
  switch (f) {
    case Family::Real: return 1;
    case Family::Spin: return m + 1;
    case Family::HermReal: return m * (m + 1) / 2;
    case Family::HermComplex: return m * m;
    case Family::HermQuat: return m * (2 * m - 1);
    case Family::Albert: return 27;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Elements

template <class T = Rational>
class Element {
 public:
  Element() = default;
  Element(AlgebraPtr alg, std::vector<T> coords) : alg_(std::move(alg)), coords_(std::move(coords)) {
    if (coords_.size() != alg_->dim()) throw DimensionError("coordinate count differs from algebra dimension");
  }

  static Element zero(AlgebraPtr alg) {
    const auto d = alg->dim();
    return Element(std::move(alg), std::vector<T>(d, T(Rational(0))));
  }

  const AlgebraPtr& algebra() const { return alg_; }
  std::size_t dim() const { return coords_.size(); }
  const std::vector<T>& coords() const { return coords_; }
  T& operator[](std::size_t i) { return coords_[i]; }
  const T& operator[](std::size_t i) const { return coords_[i]; }

  Element& operator+=(const Element& o) {
    check_same(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  Element& operator-=(const Element& o) {
    check_same(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  Element& operator*=(const Rational& s) {
    for (auto& c : coords_) c *= s;
    return *this;
  }

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Rational& s, Element a) { return a *= s; }
  friend Element operator*(Element a, const Rational& s) { return a *= s; }
  friend Element operator-(Element a) {
    for (auto& c : a.coords_) c *= Rational(-1);
    return a;
  }

  friend bool operator==(const Element& a, const Element& b) {
    return a.alg_ == b.alg_ && a.coords_ == b.coords_;
  }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (!jkep::is_zero(c)) return false;
    return true;
  }

  void check_same(const Element& o) const {
    if (alg_ != o.alg_) throw DimensionError("elements belong to different algebras");
  }

 private:
  AlgebraPtr alg_;
  std::vector<T> coords_;
};

/// Endomorphism of V as a matrix acting on coordinate columns.
using Endo = Matrix<Rational>;

inline Element<> unit_element(const AlgebraPtr& alg) { return Element<>(alg, alg->unit_coords()); }

inline Element<> basis_element(const AlgebraPtr& alg, std::size_t a) {
  std::vector<Rational> c(alg->dim());
  c.at(a) = 1;
  return Element<>(alg, std::move(c));
}

inline Element<> random_element(const AlgebraPtr& alg, RationalSampler& rng) {
  std::vector<Rational> c(alg->dim());
  for (auto& x : c) x = rng.next();
  return Element<>(alg, std::move(c));
}

/// Lifts rational coordinates into another coordinate ring.
template <class T>
Element<T> lift(const Element<>& a) {
  std::vector<T> c;
  c.reserve(a.dim());
  for (const auto& x : a.coords()) c.emplace_back(x);
  return Element<T>(a.algebra(), std::move(c));
}

/// Jordan product a o b.
template <class T>
Element<T> mul(const Element<T>& a, const Element<T>& b) {
  a.check_same(b);
  const Algebra& alg = *a.algebra();
  const std::size_t d = alg.dim();
  auto out = Element<T>::zero(a.algebra());
  for (std::size_t i = 0; i < d; ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < d; ++j) {
      const auto& terms = alg.product(i, j);
      if (terms.empty() || is_zero(b[j])) continue;
      T ab = a[i] * b[j];
      for (const auto& t : terms) out[t.index] += ab * t.coeff;
    }
  }
  return out;
}

/// Invariant inner product via the (diagonal) Gram data.
template <class T>
T inner(const Element<T>& a, const Element<T>& b) {
  a.check_same(b);
  const auto& g = a.algebra()->gram();
  T acc(Rational(0));
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (is_zero(a[i]) || is_zero(b[i])) continue;
    acc += (a[i] * b[i]) * g[i];
  }
  return acc;
}

/// Jordan triple product {abc} = a(bc) - b(ca) + c(ab).
template <class T>
Element<T> triple(const Element<T>& a, const Element<T>& b, const Element<T>& c) {
  return mul(a, mul(b, c)) - mul(b, mul(c, a)) + mul(c, mul(a, b));
}

/// Matrix of the multiplication operator L_a.
inline Endo L_op(const Element<>& a) {
  const Algebra& alg = *a.algebra();
  const std::size_t d = alg.dim();
  Endo m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& t : alg.product(i, j)) m(t.index, j) += a[i] * t.coeff;
  }
  return m;
}

/// S_ab = [L_a, L_b] + L_{ab}, the operator c -> {abc}.
inline Endo S_op(const Element<>& a, const Element<>& b) {
  a.check_same(b);
  const Endo la = L_op(a), lb = L_op(b);
  return la * lb - lb * la + L_op(mul(a, b));
}

template <class T>
Element<T> apply(const Endo& m, const Element<T>& v) {
  if (m.cols() != v.dim() || m.rows() != v.dim()) throw DimensionError("endomorphism size differs from algebra");
  auto out = Element<T>::zero(v.algebra());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& mij = m(i, j);
      if (is_zero(mij) || is_zero(v[j])) continue;
      out[i] += v[j] * mij;
    }
  return out;
}

/// Adjoint with respect to the invariant metric: G^{-1} M^T G.
inline Endo metric_adjoint(const Endo& m, const Algebra& alg) {
  const auto& g = alg.gram();
  const std::size_t d = alg.dim();
  if (m.rows() != d || m.cols() != d) throw DimensionError("endomorphism size differs from algebra");
  Endo t(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (!is_zero(m(j, i))) t(i, j) = m(j, i) * g[j] / g[i];
  return t;
}

/// (1/dim) Tr L_{ab}, computed from the structure constants alone.
inline Rational trace_form(const Element<>& a, const Element<>& b) {
  const Endo l = L_op(mul(a, b));
  Rational tr = 0;
  for (std::size_t i = 0; i < l.rows(); ++i) tr += l(i, i);
  return tr / static_cast<long>(l.rows());
}

// ---------------------------------------------------------------------------
// Construction

class AlgebraBuilder {
 public:
  AlgebraBuilder(Family f, int n, std::size_t dim) {
    alg_.family_ = f;
    alg_.n_ = n;
    alg_.dim_ = dim;
    alg_.table_.resize(dim * dim);
    alg_.labels_.resize(dim);
  }

  void set_product(std::size_t a, std::size_t b, std::vector<ProductTerm> terms) {
    alg_.table_[a * alg_.dim_ + b] = std::move(terms);
  }
  void set_unit(std::vector<Rational> unit) { alg_.unit_ = std::move(unit); }
  void set_label(std::size_t a, std::string s) { alg_.labels_[a] = std::move(s); }

  /// Derives the Gram diagonal from the trace form and checks every invariant.
  AlgebraPtr finish() {
    auto ptr = std::make_shared<Algebra>(std::move(alg_));
    const std::size_t d = ptr->dim();

    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        for (std::size_t g = 0; g < d; ++g)
          if (ptr->structure_constant(a, b, g) != ptr->structure_constant(b, a, g))
            throw InvariantViolation("structure constants not symmetric");

    // L_e must be the identity.
    const Endo le = L_op(Element<>(ptr, ptr->unit_));
    if (!(le == Endo::identity(d))) throw InvariantViolation("L_e is not the identity");

    ptr->gram_.assign(d, Rational(0));
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        const Rational t = trace_form(basis_element(ptr, a), basis_element(ptr, b));
        if (a == b) {
          if (sgn(t) <= 0) throw InvariantViolation("trace form not positive on basis");
          ptr->gram_[a] = t;
        } else if (!is_zero(t)) {
          throw InvariantViolation("canonical basis is not orthogonal");
        }
      }
    if (inner(unit_element(ptr), unit_element(ptr)) != 1) throw InvariantViolation("<e|e> != 1");
    return ptr;
  }

 private:
  Algebra alg_;
};

namespace detail {

inline AlgebraPtr build_real() {
  AlgebraBuilder b(Family::Real, 0, 1);
  b.set_product(0, 0, {{0, 1}});
  b.set_unit({Rational(1)});
  b.set_label(0, "1");
  return b.finish();
}

// (s, u) o (t, v) = (s t + u.v, s v + t u)
inline AlgebraPtr build_spin(int n) {
  const std::size_t d = static_cast<std::size_t>(n) + 1;
  AlgebraBuilder b(Family::Spin, n, d);
  b.set_product(0, 0, {{0, 1}});
  for (std::size_t i = 1; i < d; ++i) {
    b.set_product(0, i, {{i, 1}});
    b.set_product(i, 0, {{i, 1}});
    b.set_product(i, i, {{0, 1}});
  }
  std::vector<Rational> unit(d);
  unit[0] = 1;
  b.set_unit(unit);
  b.set_label(0, "e0");
  for (std::size_t i = 1; i < d; ++i) b.set_label(i, "v" + std::to_string(i));
  return b.finish();
}

// Hermitian n x n matrices over the Cayley-Dickson algebra of dimension k.
// Entries are k-vectors of rationals.
class HermModel {
 public:
  using Entry = std::vector<Rational>;
  using Mat = std::vector<Entry>;  // n*n entries, row major

  HermModel(std::size_t n, std::size_t k) : n_(n), k_(k), cd_(k) {
    for (std::size_t i = 0; i < n; ++i) {
      Mat m = zero();
      m[i * n + i][0] = 1;
      basis_.push_back(std::move(m));
      labels_.push_back("E" + std::to_string(i + 1) + std::to_string(i + 1));
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t u = 0; u < k; ++u) {
          Mat m = zero();
          m[i * n + j][u] = 1;
          m[j * n + i] = CayleyDickson::conjugate(m[i * n + j]);
          basis_.push_back(std::move(m));
          labels_.push_back("F" + std::to_string(i + 1) + std::to_string(j + 1) + "_" + std::to_string(u));
        }
  }

  std::size_t dim() const { return basis_.size(); }
  const Mat& basis(std::size_t a) const { return basis_[a]; }
  const std::string& label(std::size_t a) const { return labels_[a]; }

  Mat zero() const { return Mat(n_ * n_, Entry(k_)); }

  Mat product(const Mat& a, const Mat& b) const {
    Mat c = zero();
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t l = 0; l < n_; ++l) {
        const Entry& ail = a[i * n_ + l];
        if (all_zero(ail)) continue;
        for (std::size_t j = 0; j < n_; ++j) {
          const Entry& blj = b[l * n_ + j];
          if (all_zero(blj)) continue;
          auto p = cd_.multiply(ail, blj);
          for (std::size_t u = 0; u < k_; ++u) c[i * n_ + j][u] += p[u];
        }
      }
    return c;
  }

  /// (ab + ba) / 2
  Mat jordan(const Mat& a, const Mat& b) const {
    Mat x = product(a, b), y = product(b, a);
    for (std::size_t e = 0; e < x.size(); ++e)
      for (std::size_t u = 0; u < k_; ++u) x[e][u] = (x[e][u] + y[e][u]) / 2;
    return x;
  }

  /// Coordinates of a hermitian matrix in the canonical basis.
  std::vector<Rational> decompose(const Mat& m) const {
    std::vector<Rational> c;
    c.reserve(dim());
    for (std::size_t i = 0; i < n_; ++i) {
      const Entry& d = m[i * n_ + i];
      for (std::size_t u = 1; u < k_; ++u)
        if (!is_zero(d[u])) throw InvariantViolation("non-real diagonal in hermitian product");
      c.push_back(d[0]);
    }
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) {
        if (CayleyDickson::conjugate(m[i * n_ + j]) != m[j * n_ + i])
          throw InvariantViolation("non-hermitian product");
        for (std::size_t u = 0; u < k_; ++u) c.push_back(m[i * n_ + j][u]);
      }
    return c;
  }

 private:
  static bool all_zero(const Entry& e) {
    for (const auto& x : e)
      if (!is_zero(x)) return false;
    return true;
  }

  std::size_t n_, k_;
  CayleyDickson cd_;
  std::vector<Mat> basis_;
  std::vector<std::string> labels_;
};

inline AlgebraPtr build_herm(Family f, int n, std::size_t k) {
  HermModel model(static_cast<std::size_t>(n), k);
  const std::size_t d = model.dim();
  AlgebraBuilder b(f, f == Family::Albert ? 0 : n, d);
  for (std::size_t a = 0; a < d; ++a) {
    b.set_label(a, model.label(a));
    for (std::size_t c = a; c < d; ++c) {
      auto coords = model.decompose(model.jordan(model.basis(a), model.basis(c)));
      std::vector<ProductTerm> terms;
      for (std::size_t g = 0; g < d; ++g)
        if (!is_zero(coords[g])) terms.push_back({g, coords[g]});
      b.set_product(a, c, terms);
      if (c != a) b.set_product(c, a, std::move(terms));
    }
  }
  std::vector<Rational> unit(d);
  for (int i = 0; i < n; ++i) unit[static_cast<std::size_t>(i)] = 1;
  b.set_unit(std::move(unit));
  return b.finish();
}

}  // namespace detail

/// Builds a catalogued algebra. Throws ConfigurationError for unsupported (family, n).
inline AlgebraPtr make_algebra(Family f, int n = 0) {
  switch (f) {
    case Family::Real: return detail::build_real();
    case Family::Spin:
      if (n < 1) throw ConfigurationError("spin:n needs n >= 1");
      return detail::build_spin(n);
    case Family::HermReal:
      if (n < 2) throw ConfigurationError("herm-r:n needs n >= 2");
      return detail::build_herm(f, n, 1);
    case Family::HermComplex:
      if (n < 2) throw ConfigurationError("herm-c:n needs n >= 2");
      return detail::build_herm(f, n, 2);
    case Family::HermQuat:
      if (n < 2) throw ConfigurationError("herm-h:n needs n >= 2");
      return detail::build_herm(f, n, 4);
    case Family::Albert: return detail::build_herm(f, 3, 8);
  }
  throw ConfigurationError("unknown family");
}

/// Parses "real", "spin:n", "herm-r:n", "herm-c:n", "herm-h:n", "albert".
inline AlgebraPtr parse_algebra(std::string_view sel) {
  const std::string s(sel);
  if (s == "real") return make_algebra(Family::Real);
  if (s == "albert") return make_algebra(Family::Albert);
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw ConfigurationError("unknown algebra selector '" + s + "'");
  const std::string head = s.substr(0, colon), tail = s.substr(colon + 1);
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(tail, &used);
    if (used != tail.size()) throw ConfigurationError("");
  } catch (const std::exception&) {
    throw ConfigurationError("invalid parameter in algebra selector '" + s + "'");
  }
  if (n > 12) throw ConfigurationError("parameter too large in '" + s + "'");
  if (head == "spin") return make_algebra(Family::Spin, n);
  if (head == "herm-r") return make_algebra(Family::HermReal, n);
  if (head == "herm-c") return make_algebra(Family::HermComplex, n);
  if (head == "herm-h") return make_algebra(Family::HermQuat, n);
  throw ConfigurationError("unknown algebra selector '" + s + "'");
}

}  // namespace jkep
