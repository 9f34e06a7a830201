#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace jkep {

using Rational = mpq_class;

/// Thrown for malformed user input (algebra selectors, rational literals, CLI options).
class ConfigurationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when operands belong to different algebras or have incompatible sizes.
class DimensionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a value violates a structural invariant (e.g. a str component outside str).
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Parses "p/q", "p", or a plain decimal such as "0.125" or "-2.5" into an exact rational.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ConfigurationError("empty rational literal");
  auto bad = [&] { return ConfigurationError("invalid rational literal '" + s + "'"); };

  if (auto dot = s.find('.'); dot != std::string::npos) {
    if (s.find('/') != std::string::npos) throw bad();
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac_len = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+") throw bad();
    mpz_class num;
    if (digits[0] == '+') digits.erase(0, 1);
    if (num.set_str(digits, 10) != 0) throw bad();
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw bad();
  if (sgn(q.get_den()) == 0) throw ConfigurationError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

/// Canonical "p/q" form; integers keep the "/1" so every exported value has one shape.
inline std::string to_pq(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Short human form: "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Seeded source of small-height rationals: numerators uniform in [-9, 9],
/// denominators uniform in {1, 2, 3}.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : engine_(seed) {}
  RationalSampler(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    engine_.seed(seq);
  }

  Rational next() {
    const long num = static_cast<long>(engine_() % 19) - 9;
    const long den = static_cast<long>(engine_() % 3) + 1;
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  Rational next_nonzero() {
    for (;;) {
      Rational q = next();
      if (!is_zero(q)) return q;
    }
  }

  std::uint64_t next_index(std::uint64_t bound) { return engine_() % bound; }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Stable 64-bit hash of a label, used to derive per-relation random streams.
inline std::uint64_t stream_id(std::string_view label) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : label) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace jkep
