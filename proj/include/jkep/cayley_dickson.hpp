#pragma once

// Unit multiplication tables for the real division algebras R, C, H, O.
//
// Built by the Cayley-Dickson doubling rule
//
//     (a, b)(c, d) = (a c - conj(d) b,  d a + b conj(c)),
//
// starting from R. Unit k of the doubled algebra of dimension 2m is (e_k, 0)
// for k < m and (0, e_{k-m}) otherwise. With this convention e1 = i, e2 = j,
// e3 = k reproduces Hamilton's quaternions (i j = k), and units e4..e7 extend
// them to the octonions.

#include <array>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "jkep/rational.hpp"

namespace jkep {

struct UnitProduct {
  int sign = 0;  // +1 or -1
  std::size_t unit = 0;
};

class CayleyDickson {
 public:
  /// dim in {1, 2, 4, 8}.
  explicit CayleyDickson(std::size_t dim) : dim_(dim), table_(dim * dim) {
    if (dim != 1 && dim != 2 && dim != 4 && dim != 8)
      throw ConfigurationError("Cayley-Dickson dimension must be 1, 2, 4 or 8");
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = 0; b < dim; ++b) table_[a * dim + b] = unit_product(a, b, dim);
  }

  std::size_t dim() const { return dim_; }

  const UnitProduct& unit(std::size_t a, std::size_t b) const { return table_[a * dim_ + b]; }

  std::vector<Rational> multiply(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
    std::vector<Rational> z(dim_);
    for (std::size_t a = 0; a < dim_; ++a) {
      if (is_zero(x[a])) continue;
      for (std::size_t b = 0; b < dim_; ++b) {
        if (is_zero(y[b])) continue;
        const auto& p = unit(a, b);
        if (p.sign > 0)
          z[p.unit] += x[a] * y[b];
        else
          z[p.unit] -= x[a] * y[b];
      }
    }
    return z;
  }

  static std::vector<Rational> conjugate(std::vector<Rational> x) {
    for (std::size_t k = 1; k < x.size(); ++k) x[k] = -x[k];
    return x;
  }

 private:
  // Product of units e_a e_b in the algebra of dimension n.
  static UnitProduct unit_product(std::size_t a, std::size_t b, std::size_t n) {
    if (n == 1) return {1, 0};
    const std::size_t m = n / 2;
    // conj of a unit: e_0 fixed, others negated.
    auto conj_sign = [](std::size_t u) { return u == 0 ? 1 : -1; };
    const bool a_hi = a >= m, b_hi = b >= m;
    const std::size_t ar = a_hi ? a - m : a, br = b_hi ? b - m : b;
    if (!a_hi && !b_hi) {
      // (a,0)(c,0) = (ac, 0)
      return unit_product(ar, br, m);
    }
    if (!a_hi && b_hi) {
      // (a,0)(0,d) = (0, d a)
      auto p = unit_product(br, ar, m);
      return {p.sign, p.unit + m};
    }
    if (a_hi && !b_hi) {
      // (0,b)(c,0) = (0, b conj(c))
      auto p = unit_product(ar, br, m);
      return {p.sign * conj_sign(br), p.unit + m};
    }
    // (0,b)(0,d) = (-conj(d) b, 0)
    auto p = unit_product(br, ar, m);
    return {-p.sign * conj_sign(br), p.unit};
  }

  std::size_t dim_;
  std::vector<UnitProduct> table_;
};

}  // namespace jkep
