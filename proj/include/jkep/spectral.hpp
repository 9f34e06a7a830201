#pragma once

// Rayleigh-Ritz for H(nu) = -1/2 d^2/dx^2 + (nu/2)(nu/2 - 1) / (2 x^2) - 1/x
// on L^2(R_+, dx), in the trial basis phi_k = x^{nu/2+k} e^{-beta x}.
//
// With a = nu/2 + k,
//   H phi_k = [-1/2 k(k+nu-1) x^{a-2} + (a beta - 1) x^{a-1} - 1/2 beta^2 x^a] e^{-beta x},
// the centrifugal term having cancelled against the kinetic one. Every entry
// is then a combination of I(m) = int x^m e^{-2 beta x} dx, and after dividing
// by I(nu) only the ratios
//   I(nu + m) / I(nu) = (nu+1)_m / (2 beta)^m,   I(nu - 1) / I(nu) = 2 beta / nu
// are needed, so H and G are exact rationals for rational nu and beta.
//
// The default solve factors G = L D L^T exactly, forms L^{-1} H L^{-T}
// exactly, and only then converts D^{-1/2} L^{-1} H L^{-T} D^{-1/2} to
// floating point for a symmetric eigensolve.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "jkep/matrix.hpp"
#include "jkep/rational.hpp"
#include "jkep/report.hpp"

namespace jkep {

class ConditioningError : public ConfigurationError {
 public:
  using ConfigurationError::ConfigurationError;
};

enum class SolveMode { ExactOrthogonalization, Floating };

struct SpectralConfig {
  Rational nu;
  std::size_t basis_size = 40;
  Rational beta;  // 0 selects the default 2 / nu
  std::size_t levels = 3;
  SolveMode mode = SolveMode::ExactOrthogonalization;

  Rational effective_beta() const { return beta == 0 ? Rational(2 / nu) : beta; }

  void validate() const {
    if (nu <= 0) throw ConfigurationError("nu must be positive");
    if (basis_size < 2) throw ConfigurationError("basis size must be at least 2");
    if (levels < 1) throw ConfigurationError("at least one level is required");
    if (basis_size <= levels) throw ConfigurationError("basis size must exceed the number of levels");
    if (beta < 0) throw ConfigurationError("beta must be positive");
  }
};

/// -(1/2) / (I + nu/2)^2
inline double closed_form_level(const Rational& nu, std::size_t level) {
  const double d = double(level) + nu.get_d() / 2;
  return -0.5 / (d * d);
}

/// Decay rate of the exact level-I eigenfunction, 1 / (I + nu/2).
inline Rational matched_beta(const Rational& nu, std::size_t level) { return 1 / (Rational(level) + nu / 2); }

struct ExactMatrices {
  Matrix<Rational> H, G;
};

namespace detail {

/// I(nu + m) / I(nu) for m >= -1.
inline Rational moment_ratio(const Rational& nu, const Rational& beta, long m) {
  if (m == -1) return 2 * beta / nu;
  if (m < -1) throw InvariantViolation("divergent moment requested");
  Rational r = 1;
  for (long i = 1; i <= m; ++i) r *= (nu + i) / (2 * beta);
  return r;
}

}  // namespace detail

/// Coefficient of x^{a-2} e^{-beta x} in H phi_k: -(1/2)[a(a-1) - s(s-1)], s = nu/2.
inline Rational singular_coefficient(const Rational& nu, std::size_t k) {
  const Rational s = nu / 2, a = s + Rational(k);
  return Rational(-1, 2) * (a * (a - 1) - s * (s - 1));
}

inline ExactMatrices exact_matrices(const SpectralConfig& cfg) {
  cfg.validate();
  const Rational& nu = cfg.nu;
  const Rational beta = cfg.effective_beta();
  const std::size_t n = cfg.basis_size;
  ExactMatrices m{Matrix<Rational>(n, n), Matrix<Rational>(n, n)};
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      const long jk = static_cast<long>(j + k);
      m.G(j, k) = detail::moment_ratio(nu, beta, jk);
      const Rational a = nu / 2 + Rational(k);
      Rational h = (a * beta - 1) * detail::moment_ratio(nu, beta, jk - 1) -
                   Rational(1, 2) * beta * beta * detail::moment_ratio(nu, beta, jk);
      const Rational c = singular_coefficient(nu, k);
      if (!is_zero(c)) h += c * detail::moment_ratio(nu, beta, jk - 2);
      m.H(j, k) = h;
    }
  return m;
}

struct SpectrumResult {
  std::vector<double> eigenvalues;
  std::vector<std::optional<double>> residuals;  // |E(N) - E(N-8)| when N - 8 > levels
  std::vector<Rational> betas;                   // trial decay used for each level
};

namespace detail {

/// Lower-triangular solve L X = B with unit diagonal, exact.
inline Matrix<Rational> unit_lower_solve(const Matrix<Rational>& L, const Matrix<Rational>& B) {
  const std::size_t n = L.rows();
  Matrix<Rational> X = B;
  for (std::size_t c = 0; c < B.cols(); ++c)
    for (std::size_t i = 0; i < n; ++i) {
      Rational s = X(i, c);
      for (std::size_t k = 0; k < i; ++k)
        if (!is_zero(L(i, k)) && !is_zero(X(k, c))) s -= L(i, k) * X(k, c);
      X(i, c) = s;
    }
  return X;
}

/// sign(q) sqrt(|q|) to double precision via a 256-bit float.
inline double signed_sqrt(const Rational& q) {
  if (is_zero(q)) return 0.0;
  mpf_class f(abs(q), 256);
  f = sqrt(f);
  return sgn(q) < 0 ? -f.get_d() : f.get_d();
}

inline std::vector<double> ritz_exact(const ExactMatrices& m) {
  if (!(m.H == m.H.transpose())) throw InvariantViolation("H is not symmetric");
  const auto f = ldl_decompose(m.G);
  if (!f) throw ConditioningError("Gram matrix is singular");
  const std::size_t n = m.G.rows();
  for (const auto& d : f->diag)
    if (sgn(d) <= 0) throw InvariantViolation("Gram matrix is not positive definite");
  // M = L^{-1} H L^{-T}
  const Matrix<Rational> W = unit_lower_solve(f->lower, m.H);
  const Matrix<Rational> M = unit_lower_solve(f->lower, W.transpose());
  Eigen::MatrixXd C(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      // M_ij / sqrt(d_i d_j), formed as a signed square root of an exact rational
      const Rational q = M(i, j) * abs(M(i, j)) / (f->diag[i] * f->diag[j]);
      C(i, j) = C(j, i) = signed_sqrt(q);
    }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(C, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw InvariantViolation("symmetric eigensolver failed");
  const auto& ev = es.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

inline constexpr double kMaxGramCondition = 1e12;

inline std::vector<double> ritz_floating(const ExactMatrices& m) {
  const std::size_t n = m.G.rows();
  Eigen::MatrixXd H(n, n), G(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      H(i, j) = m.H(i, j).get_d();
      G(i, j) = m.G(i, j).get_d();
    }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> gs(G, Eigen::EigenvaluesOnly);
  const double lo = gs.eigenvalues().minCoeff(), hi = gs.eigenvalues().maxCoeff();
  if (!(lo > 0) || hi / lo > kMaxGramCondition)
    throw ConditioningError("Gram matrix is numerically singular at basis size " + std::to_string(n) +
                            "; use a smaller basis or the exact orthogonalization mode");
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(H, G, Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
  if (es.info() != Eigen::Success)
    throw ConditioningError("Cholesky of the Gram matrix failed; use a smaller basis or the exact mode");
  const auto& ev = es.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

}  // namespace detail

/// All Ritz values, ascending.
inline std::vector<double> ritz_values(const SpectralConfig& cfg) {
  const auto m = exact_matrices(cfg);
  return cfg.mode == SolveMode::Floating ? detail::ritz_floating(m) : detail::ritz_exact(m);
}

inline constexpr std::size_t kResidualStep = 8;

/// Lowest `levels` Ritz values at one beta, with residuals from the N - 8 basis.
inline SpectrumResult spectrum(const SpectralConfig& cfg) {
  cfg.validate();
  SpectrumResult r;
  const auto full = ritz_values(cfg);
  std::vector<double> coarse;
  if (cfg.basis_size >= kResidualStep + cfg.levels + 1) {
    SpectralConfig c = cfg;
    c.basis_size -= kResidualStep;
    coarse = ritz_values(c);
  }
  for (std::size_t i = 0; i < cfg.levels; ++i) {
    r.eigenvalues.push_back(full[i]);
    r.residuals.push_back(coarse.empty() ? std::nullopt : std::optional<double>(std::abs(full[i] - coarse[i])));
    r.betas.push_back(cfg.effective_beta());
  }
  return r;
}

/// Level I taken from a run with beta = 1 / (I + nu/2).
inline SpectrumResult tuned_spectrum(SpectralConfig cfg) {
  cfg.validate();
  SpectrumResult r;
  for (std::size_t level = 0; level < cfg.levels; ++level) {
    SpectralConfig c = cfg;
    c.beta = matched_beta(cfg.nu, level);
    c.levels = level + 1;
    const auto one = spectrum(c);
    r.eigenvalues.push_back(one.eigenvalues[level]);
    r.residuals.push_back(one.residuals[level]);
    r.betas.push_back(c.beta);
  }
  return r;
}

struct ConvergenceRow {
  std::size_t basis_size;
  std::size_t level;
  double computed;
  double closed_form;
  double abs_error;
};

inline constexpr double kVariationalSlack = 1e-12;

/// Errors against the closed form over ascending basis sizes; `monotone`
/// reports whether each level's error is non-increasing up to 1e-12.
struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;
  bool monotone = true;
};

inline ConvergenceTable convergence_study(const Rational& nu, std::size_t levels, const std::vector<std::size_t>& sizes,
                                          const Rational& beta = 0) {
  for (std::size_t i = 1; i < sizes.size(); ++i)
    if (sizes[i] <= sizes[i - 1]) throw ConfigurationError("basis sizes must be ascending");
  ConvergenceTable t;
  std::vector<double> last(levels, INFINITY);
  for (std::size_t n : sizes) {
    SpectralConfig cfg{nu, n, beta, levels};
    const auto ev = ritz_values(cfg);
    for (std::size_t l = 0; l < levels; ++l) {
      const double cf = closed_form_level(nu, l);
      const double err = std::abs(ev[l] - cf);
      t.rows.push_back({n, l, ev[l], cf, err});
      if (err > last[l] + kVariationalSlack) t.monotone = false;
      last[l] = err;
    }
  }
  return t;
}

inline constexpr double kSpectrumRelTolerance = 1e-6;

/// Checks on one spectrum: closed-form agreement, variational bound, ordering,
/// negativity, exact symmetry and positivity of the matrices.
inline Report spectrum_report(const SpectralConfig& cfg, bool tune_beta) {
  cfg.validate();
  Report rep("spectrum", "nu=" + to_pq(cfg.nu));
  const auto res = tune_beta ? tuned_spectrum(cfg) : spectrum(cfg);

  std::vector<Rational> betas;
  for (const auto& b : res.betas)
    if (std::find(betas.begin(), betas.end(), b) == betas.end()) betas.push_back(b);
  for (const auto& beta : betas) {
    SpectralConfig c = cfg;
    c.beta = beta;
    const auto m = exact_matrices(c);
    auto w = [&] { return json{{"beta", to_pq(beta)}}; };
    rep.record("spectrum.H_symmetric", m.H == m.H.transpose(), w);
    const auto f = ldl_decompose(m.G);
    bool pd = f.has_value();
    if (pd)
      for (const auto& d : f->diag) pd = pd && sgn(d) > 0;
    rep.record("spectrum.G_positive_definite", pd, w);
  }

  json levels = json::array();
  for (std::size_t l = 0; l < res.eigenvalues.size(); ++l) {
    const double e = res.eigenvalues[l], cf = closed_form_level(cfg.nu, l);
    const double rel = std::abs(e - cf) / std::abs(cf);
    auto w = [&] { return json{{"level", l}, {"computed", e}, {"closed_form", cf}}; };
    rep.record("spectrum.closed_form", rel <= kSpectrumRelTolerance, w);
    rep.record("spectrum.variational", e >= cf - kVariationalSlack, w);
    rep.record("spectrum.negative", e < 0, w);
    if (l > 0) rep.record("spectrum.increasing", e > res.eigenvalues[l - 1], w);
    json row{{"level", l}, {"computed", e}, {"closed_form", cf}, {"abs_error", std::abs(e - cf)},
             {"beta", to_pq(res.betas[l])}};
    row["residual"] = res.residuals[l] ? json(*res.residuals[l]) : json(nullptr);
    levels.push_back(std::move(row));
  }
  rep.set_info("levels", std::move(levels));
  rep.set_info("basis_size", cfg.basis_size);
  rep.set_info("tune_beta", tune_beta);
  return rep;
}

}  // namespace jkep
