#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <type_traits>
#include <vector>

#include "jkep/rational.hpp"

namespace jkep {

/// Dense row-major matrix over an exact scalar ring.
template <class T = Rational>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<T>& data() const { return data_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& v) { return jkep::is_zero(v); });
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
  friend Matrix operator-(Matrix a) {
    for (auto& v : a.data_) v = -v;
    return a;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
    if constexpr (std::is_same_v<T, Rational>) {
      return rational_product(a, b);
    } else {
      Matrix c(a.rows_, b.cols_);
      for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
          const T& aik = a(i, k);
          if (jkep::is_zero(aik)) continue;
          for (std::size_t j = 0; j < b.cols_; ++j) {
            const T& bkj = b(k, j);
            if (!jkep::is_zero(bkj)) c(i, j) += aik * bkj;
          }
        }
      return c;
    }
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  // Rows of a and columns of b are scaled to integers by the lcm of their
  // denominators, multiplied over Z, and divided back once per entry.
  static Matrix rational_product(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.rows_, m = a.cols_, p = b.cols_;
    std::vector<mpz_class> ra(n, 1), cb(p, 1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < m; ++k) mpz_lcm(ra[i].get_mpz_t(), ra[i].get_mpz_t(), a(i, k).get_den_mpz_t());
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t j = 0; j < p; ++j) mpz_lcm(cb[j].get_mpz_t(), cb[j].get_mpz_t(), b(k, j).get_den_mpz_t());
    std::vector<mpz_class> ai(n * m), bi(m * p), ci(n * p);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < m; ++k) {
        const Rational& v = a(i, k);
        if (jkep::is_zero(v)) continue;
        mpz_divexact(ai[i * m + k].get_mpz_t(), ra[i].get_mpz_t(), v.get_den_mpz_t());
        ai[i * m + k] *= v.get_num();
      }
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t j = 0; j < p; ++j) {
        const Rational& v = b(k, j);
        if (jkep::is_zero(v)) continue;
        mpz_divexact(bi[k * p + j].get_mpz_t(), cb[j].get_mpz_t(), v.get_den_mpz_t());
        bi[k * p + j] *= v.get_num();
      }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < m; ++k) {
        const mpz_class& x = ai[i * m + k];
        if (sgn(x) == 0) continue;
        for (std::size_t j = 0; j < p; ++j) {
          const mpz_class& y = bi[k * p + j];
          if (sgn(y) != 0) mpz_addmul(ci[i * p + j].get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
        }
      }
    Matrix c(n, p);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < p; ++j) {
        if (sgn(ci[i * p + j]) == 0) continue;
        Rational& out = c(i, j);
        out.get_num() = ci[i * p + j];
        out.get_den() = ra[i] * cb[j];
        out.canonicalize();
      }
    return c;
  }

  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
  return a * b - b * a;
}

/// Sparse vector as sorted (index, value) pairs with no stored zeros.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

inline SparseVector to_sparse(const std::vector<Rational>& dense) {
  SparseVector v;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (!is_zero(dense[i])) v.emplace_back(i, dense[i]);
  return v;
}

/// Incrementally built row-echelon basis of a subspace of Q^n.
///
/// Each stored row has a distinct leading index (its pivot) with coefficient 1.
/// A vector lies in the span iff repeated elimination of its leading entry
/// against the pivot rows drives it to zero.
class SparseEchelon {
 public:
  /// Reduces v; returns true when v was independent (and adds it).
  bool insert(SparseVector v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    const Rational lead = v.front().second;
    for (auto& [i, x] : v) x /= lead;
    const std::size_t pivot = v.front().first;
    rows_.emplace(pivot, std::move(v));
    return true;
  }

  bool contains(SparseVector v) const { return reduce(std::move(v)).empty(); }

  std::size_t rank() const { return rows_.size(); }

  /// Leading-term reduction; stops at the first non-pivot leading index.
  SparseVector reduce(SparseVector v) const {
    for (;;) {
      if (v.empty()) return v;
      auto it = rows_.find(v.front().first);
      if (it == rows_.end()) return v;
      v = axpy(v, -v.front().second, it->second);
    }
  }

 private:
  static SparseVector axpy(const SparseVector& v, const Rational& a, const SparseVector& row) {
    SparseVector out;
    out.reserve(v.size() + row.size());
    std::size_t i = 0, j = 0;
    while (i < v.size() || j < row.size()) {
      if (j == row.size() || (i < v.size() && v[i].first < row[j].first)) {
        out.push_back(v[i++]);
      } else if (i == v.size() || row[j].first < v[i].first) {
        out.emplace_back(row[j].first, a * row[j].second);
        ++j;
      } else {
        Rational s = v[i].second + a * row[j].second;
        if (!is_zero(s)) out.emplace_back(v[i].first, std::move(s));
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::map<std::size_t, SparseVector> rows_;
};

/// Exact rank of a list of (dense) row vectors.
inline std::size_t exact_rank(const std::vector<std::vector<Rational>>& rows) {
  SparseEchelon e;
  for (const auto& r : rows) e.insert(to_sparse(r));
  return e.rank();
}

/// Exact leading principal minors of a square matrix, one determinant per block.
inline std::vector<Rational> leading_principal_minors(const Matrix<Rational>& m) {
  if (m.rows() != m.cols()) throw DimensionError("minors need a square matrix");
  const std::size_t n = m.rows();
  std::vector<Rational> minors;
  minors.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) {
    // Determinant of the k x k leading block with partial pivoting.
    Matrix<Rational> a(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) a(i, j) = m(i, j);
    Rational det = 1;
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t p = c;
      while (p < k && is_zero(a(p, c))) ++p;
      if (p == k) {
        det = 0;
        break;
      }
      if (p != c) {
        for (std::size_t j = 0; j < k; ++j) std::swap(a(p, j), a(c, j));
        det = -det;
      }
      det *= a(c, c);
      for (std::size_t r = c + 1; r < k; ++r) {
        if (is_zero(a(r, c))) continue;
        Rational f = a(r, c) / a(c, c);
        for (std::size_t j = c; j < k; ++j) a(r, j) -= f * a(c, j);
      }
    }
    minors.push_back(det);
  }
  return minors;
}

/// Sylvester's criterion on exact leading minors.
inline bool is_positive_definite(const Matrix<Rational>& m) {
  for (const auto& d : leading_principal_minors(m))
    if (sgn(d) <= 0) return false;
  return true;
}

/// Exact LDL^T factorisation of a symmetric matrix: m = L diag(d) L^T with unit
/// lower-triangular L. Returns nullopt when a zero pivot appears.
struct LdlFactors {
  Matrix<Rational> lower;
  std::vector<Rational> diag;
};

inline std::optional<LdlFactors> ldl_decompose(const Matrix<Rational>& m) {
  const std::size_t n = m.rows();
  LdlFactors f{Matrix<Rational>::identity(n), std::vector<Rational>(n)};
  for (std::size_t j = 0; j < n; ++j) {
    Rational dj = m(j, j);
    for (std::size_t k = 0; k < j; ++k) dj -= f.lower(j, k) * f.lower(j, k) * f.diag[k];
    if (is_zero(dj)) return std::nullopt;
    f.diag[j] = dj;
    for (std::size_t i = j + 1; i < n; ++i) {
      Rational s = m(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= f.lower(i, k) * f.lower(j, k) * f.diag[k];
      f.lower(i, j) = s / dj;
    }
  }
  return f;
}

}  // namespace jkep
