#pragma once

// Sparse multivariate polynomials with exact rational coefficients, and
// truncated Taylor jets built on them.
//
// Terms are kept sorted by lexicographic exponent order with no zero
// coefficients, so structural equality is polynomial equality. Lex order is a
// monomial order (compatible with multiplication), which lets products by a
// short polynomial be formed as a merge of shifted copies.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <limits>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "jkep/rational.hpp"

namespace jkep {

inline constexpr std::size_t kMaxVars = 56;

struct Monomial {
  std::array<std::uint8_t, kMaxVars> exp{};
  std::uint16_t degree = 0;

  static Monomial variable(std::size_t i) {
    Monomial m;
    m.exp.at(i) = 1;
    m.degree = 1;
    return m;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return std::memcmp(a.exp.data(), b.exp.data(), kMaxVars) == 0;
  }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    return std::memcmp(a.exp.data(), b.exp.data(), kMaxVars) < 0;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial c;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      const unsigned s = unsigned(a.exp[i]) + unsigned(b.exp[i]);
      if (s > std::numeric_limits<std::uint8_t>::max()) throw InvariantViolation("monomial exponent overflow");
      c.exp[i] = static_cast<std::uint8_t>(s);
    }
    c.degree = static_cast<std::uint16_t>(a.degree + b.degree);
    return c;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::uint64_t words[kMaxVars / 8];
    std::memcpy(words, m.exp.data(), kMaxVars);
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : words) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }
};

class Polynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  Polynomial() = default;
  Polynomial(const Rational& c) {  // NOLINT: implicit lift of constants
    if (!jkep::is_zero(c)) terms_.emplace_back(Monomial{}, c);
  }
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT

  static Polynomial variable(std::size_t i) {
    Polynomial p;
    p.terms_.emplace_back(Monomial::variable(i), Rational(1));
    return p;
  }

  static Polynomial monomial(const Monomial& m, const Rational& c) {
    Polynomial p;
    if (!jkep::is_zero(c)) p.terms_.emplace_back(m, c);
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.degree == 0); }

  Rational constant_term() const {
    if (!terms_.empty() && terms_.front().first.degree == 0) return terms_.front().second;
    return 0;
  }

  int total_degree() const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [m, c] : terms_) d = std::max<int>(d, m.degree);
    return d;
  }

  /// Degree in the variables [first, last).
  int degree_in(std::size_t first, std::size_t last) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [m, c] : terms_) {
      int s = 0;
      for (std::size_t i = first; i < last; ++i) s += m.exp[i];
      d = std::max(d, s);
    }
    return d;
  }

  /// Drops every term of total degree above max_degree.
  Polynomial truncated(int max_degree) const {
    Polynomial p;
    for (const auto& t : terms_)
      if (t.first.degree <= max_degree) p.terms_.push_back(t);
    return p;
  }

  Polynomial derivative(std::size_t var) const {
    Polynomial p;
    for (const auto& [m, c] : terms_) {
      const std::uint8_t e = m.exp[var];
      if (e == 0) continue;
      Monomial n = m;
      n.exp[var] = static_cast<std::uint8_t>(e - 1);
      n.degree = static_cast<std::uint16_t>(m.degree - 1);
      p.terms_.emplace_back(n, c * e);
    }
    // Decrementing one coordinate can reorder terms.
    std::sort(p.terms_.begin(), p.terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    return p;
  }

  /// Value at a rational point (one entry per variable in use).
  Rational evaluate(const std::vector<Rational>& point) const {
    Rational acc = 0;
    for (const auto& [m, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < point.size(); ++i)
        for (std::uint8_t k = 0; k < m.exp[i]; ++k) t *= point[i];
      acc += t;
    }
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = merge(*this, o, Rational(1)); }
  Polynomial& operator-=(const Polynomial& o) { return *this = merge(*this, o, Rational(-1)); }
  Polynomial& operator*=(const Rational& s) {
    if (jkep::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& t : terms_) t.second *= s;
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = multiply(*this, o); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, Rational(1)); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, Rational(-1)); }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return multiply(a, b); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  /// Product with every term of total degree above max_degree dropped.
  static Polynomial multiply(const Polynomial& a, const Polynomial& b,
                             int max_degree = std::numeric_limits<int>::max()) {
    if (a.is_zero() || b.is_zero()) return {};
    const Polynomial& small = a.size() <= b.size() ? a : b;
    const Polynomial& large = a.size() <= b.size() ? b : a;
    if (small.size() <= 4) {
      Polynomial acc;
      for (const auto& [m, c] : small.terms_) {
        Polynomial shifted;
        shifted.terms_.reserve(large.size());
        for (const auto& [n, d] : large.terms_)
          if (m.degree + n.degree <= max_degree) shifted.terms_.emplace_back(m * n, c * d);
        acc = merge(acc, shifted, Rational(1));
      }
      return acc;
    }
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    acc.reserve(a.size() * b.size() / 2 + 16);
    for (const auto& [m, c] : a.terms_)
      for (const auto& [n, d] : b.terms_) {
        if (m.degree + n.degree > max_degree) continue;
        auto [it, inserted] = acc.try_emplace(m * n);
        if (inserted)
          it->second = c * d;
        else
          it->second += c * d;
      }
    Polynomial p;
    p.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!jkep::is_zero(c)) p.terms_.emplace_back(m, std::move(c));
    std::sort(p.terms_.begin(), p.terms_.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
    return p;
  }

  std::string to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += c.get_str();
      for (std::size_t i = 0; i < kMaxVars; ++i)
        if (m.exp[i]) {
          s += "*" + (i < names.size() ? names[i] : "v" + std::to_string(i));
          if (m.exp[i] > 1) s += "^" + std::to_string(m.exp[i]);
        }
    }
    return s;
  }

 private:
  static Polynomial merge(const Polynomial& a, const Polynomial& b, const Rational& sb) {
    Polynomial out;
    out.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a.terms_[i].first < b.terms_[j].first)) {
        out.terms_.push_back(a.terms_[i++]);
      } else if (i == a.size() || b.terms_[j].first < a.terms_[i].first) {
        out.terms_.emplace_back(b.terms_[j].first, sb * b.terms_[j].second);
        ++j;
      } else {
        Rational s = a.terms_[i].second + sb * b.terms_[j].second;
        if (!jkep::is_zero(s)) out.terms_.emplace_back(a.terms_[i].first, std::move(s));
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::vector<Term> terms_;
};

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

/// Truncated Taylor expansion about a base point, valid through total degree
/// `order` in the displacement variables. Products keep the smaller order and
/// each derivative lowers it by one; constants carry unbounded order.
class Jet {
 public:
  static constexpr int kExact = 1 << 20;

  Jet() = default;
  Jet(const Rational& c) : poly_(c) {}  // NOLINT: implicit lift of constants
  Jet(long c) : poly_(Rational(c)) {}   // NOLINT
  Jet(Polynomial p, int order) : poly_(p.truncated(order)), order_(order) {}

  const Polynomial& poly() const { return poly_; }
  int order() const { return order_; }
  bool is_zero() const {
    if (order_ < 0) throw InvariantViolation("jet order exhausted");
    return poly_.is_zero();
  }
  /// Value at the base point.
  Rational value() const {
    if (order_ < 0) throw InvariantViolation("jet order exhausted");
    return poly_.constant_term();
  }

  Jet derivative(std::size_t var) const {
    Jet j;
    j.order_ = order_ == kExact ? kExact : order_ - 1;
    j.poly_ = poly_.derivative(var);
    return j;
  }

  Jet& operator+=(const Jet& o) { return *this = combine(*this, o, Rational(1)); }
  Jet& operator-=(const Jet& o) { return *this = combine(*this, o, Rational(-1)); }
  Jet& operator*=(const Rational& s) {
    poly_ *= s;
    return *this;
  }

  friend Jet operator+(const Jet& a, const Jet& b) { return combine(a, b, Rational(1)); }
  friend Jet operator-(const Jet& a, const Jet& b) { return combine(a, b, Rational(-1)); }
  friend Jet operator-(Jet a) { return a *= Rational(-1); }
  friend Jet operator*(Jet a, const Rational& s) { return a *= s; }
  friend Jet operator*(const Rational& s, Jet a) { return a *= s; }
  friend Jet operator*(const Jet& a, const Jet& b) {
    Jet j;
    j.order_ = std::min(a.order_, b.order_);
    j.poly_ = Polynomial::multiply(a.poly_, b.poly_, j.order_);
    return j;
  }
  Jet& operator*=(const Jet& o) { return *this = *this * o; }

  friend bool operator==(const Jet& a, const Jet& b) { return (a - b).is_zero(); }

 private:
  static Jet combine(const Jet& a, const Jet& b, const Rational& sb) {
    Jet j;
    j.order_ = std::min(a.order_, b.order_);
    Polynomial pa = a.order_ > j.order_ ? a.poly_.truncated(j.order_) : a.poly_;
    Polynomial pb = b.order_ > j.order_ ? b.poly_.truncated(j.order_) : b.poly_;
    j.poly_ = sb == 1 ? pa + pb : pa - pb;
    return j;
  }

  Polynomial poly_;
  int order_ = kExact;
};

inline bool is_zero(const Jet& j) { return j.is_zero(); }

}  // namespace jkep
