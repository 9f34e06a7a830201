// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Failing relations are listed under the criterion line.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "jkep/runner.hpp"

using namespace jkep;

namespace {

constexpr std::uint64_t kSeed = 20261015;
constexpr std::size_t kAlgebraTrials = 100;
constexpr std::size_t kExactPhaseTrials = 25;
constexpr std::size_t kPointwiseTrials = 50;
constexpr double kJordanSeconds = 60.0;
constexpr double kSpectrumSeconds = 10.0;
constexpr double kSpectrumRelError = 1e-6;
constexpr std::size_t kSpectrumBasis = 24;
constexpr std::size_t kRepDegree = 20;
constexpr std::size_t kGramDegree = 10;

const std::vector<std::string> kFamilies = {"real",     "spin:2",   "spin:3",   "spin:4",   "spin:5",
                                            "spin:6",   "spin:7",   "spin:8",   "herm-r:2", "herm-r:3",
                                            "herm-r:4", "herm-c:2", "herm-c:3", "herm-h:2", "albert"};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Criterion {
  int number;
  std::string title;
  bool ok = true;
  std::vector<std::string> notes;

  Criterion(int n, std::string t) : number(n), title(std::move(t)) {}

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }

  // Every relation of every report must pass; the trial floor applies to the
  // relations named in `counted`, or to all of them when it is empty.
  void require_reports(const std::vector<Report>& reports, std::size_t min_trials,
                       const std::vector<std::string>& counted = {}) {
    for (const auto& r : reports) {
      const std::string who = r.suite() + "/" + r.subject();
      if (r.relations().empty()) require(false, who + ": no relations recorded");
      for (const auto& [name, t] : r.relations()) {
        if (t.failed) require(false, who + " " + name + ": " + std::to_string(t.failed) + " failed");
        const bool floor = counted.empty() || std::find(counted.begin(), counted.end(), name) != counted.end();
        if (floor && t.passed + t.failed < min_trials)
          require(false, who + " " + name + ": only " + std::to_string(t.passed + t.failed) + " trials");
      }
    }
  }

  bool print() const {
    std::cout << (ok ? "PASS" : "FAIL") << "  #" << number << "  " << title << "\n";
    for (const auto& n : notes) std::cout << "        " << n << "\n";
    return ok;
  }
};

CheckMode phase_mode(const std::string& sel) {
  const std::size_t d = parse_algebra(sel)->dim();
  if (d <= kBasisDimLimit) return CheckMode::ExactBasis;
  if (d <= kExactDimLimit) return CheckMode::ExactRandom;
  return CheckMode::Pointwise;
}

std::size_t phase_trials(CheckMode m) { return m == CheckMode::Pointwise ? kPointwiseTrials : kExactPhaseTrials; }

std::vector<Report> run_suite(Suite s, bool phase) {
  std::vector<Job> jobs;
  for (const auto& sel : kFamilies) {
    if (phase) {
      const CheckMode m = phase_mode(sel);
      jobs.push_back(algebra_job(s, sel, phase_trials(m), kSeed, m));
    } else {
      jobs.push_back(algebra_job(s, sel, kAlgebraTrials, kSeed));
    }
  }
  return run_jobs(jobs, default_workers());
}

// Exact-basis runs enumerate basis tuples rather than trials; a smaller floor applies.
std::size_t min_phase_trials(const Report& r) {
  const std::string mode = r.info().value("mode", "");
  if (mode == "pointwise") return kPointwiseTrials;
  return 1;
}

void require_phase_reports(Criterion& c, const std::vector<Report>& reports) {
  for (const auto& r : reports) c.require_reports({r}, min_phase_trials(r));
}

Criterion jordan_axioms() {
  Criterion c{1, "Jordan axioms on all families, >=100 trials each, < 60 s"};
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<Report> reports;
  for (const auto& sel : kFamilies) reports.push_back(verify_jordan(parse_algebra(sel), kAlgebraTrials, kSeed));
  const double dt = seconds_since(t0);
  c.require_reports(reports, kAlgebraTrials, {"jordan.commutative", "jordan.identity"});
  for (const auto& r : reports)
    for (const char* name : {"jordan.commutative", "jordan.identity"})
      c.require(r.relations().count(name) == 1, r.subject() + ": " + name + " not recorded");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f s", dt);
  c.require(dt < kJordanSeconds, std::string("runtime ") + buf);
  c.title += std::string(" (") + buf + ")";
  return c;
}

Criterion structure_relation() {
  Criterion c{2, "[S_ab, S_cd] = S_{abc}d - S_c{bad} on >=100 quadruples per family"};
  c.require_reports(run_suite(Suite::StructureRelation, false), kAlgebraTrials);
  return c;
}

Criterion tkk_relations() {
  Criterion c{3, "TKK bracket relations and Jacobi identity on >=100 triples per family"};
  c.require_reports(run_suite(Suite::Tkk, false), kAlgebraTrials);
  return c;
}

Criterion dimension_audit() {
  Criterion c{4, "dimensions: str(spin:3)=7, co(spin:3)=15, co(real)=3, co(albert)=133, reorder-stable"};
  const auto spin3 = parse_algebra("spin:3"), real = parse_algebra("real"), albert = parse_algebra("albert");
  const TkkAlgebra co_spin3(spin3), co_real(real), co_albert(albert);
  c.require(co_spin3.str_dim() == 7, "str_dim(spin:3) = " + std::to_string(co_spin3.str_dim()));
  c.require(co_spin3.co_dim() == 15, "co_dim(spin:3) = " + std::to_string(co_spin3.co_dim()));
  c.require(co_real.co_dim() == 3, "co_dim(real) = " + std::to_string(co_real.co_dim()));
  c.require(co_albert.co_dim() == 133, "co_dim(albert) = " + std::to_string(co_albert.co_dim()));
  for (std::uint64_t s : {1u, 2u, 3u}) {
    const std::size_t d = 2 * albert->dim() + str_dim_reordered(albert, s);
    c.require(d == co_albert.co_dim(), "reordered co_dim(albert) = " + std::to_string(d));
  }
  return c;
}

Criterion moment_relations() {
  Criterion c{5, "moment-map Poisson relations: exact for dim <= 10, albert at >=50 points"};
  require_phase_reports(c, run_suite(Suite::Poisson, true));
  return c;
}

Criterion main_theorem() {
  Criterion c{6, "classical hidden-symmetry relations incl. {A_u,A_v} + 2 H L_uv = 0 and A_e = 1"};
  require_phase_reports(c, run_suite(Suite::MainTheorem, true));
  return c;
}

Criterion representation() {
  Criterion c{7, "sl(2,R) commutators, hermiticity, lowest weight on the nu grid to degree 20"};
  std::vector<Job> jobs;
  for (const auto& nu : default_nu_grid()) jobs.push_back(rep_job(nu, kRepDegree));
  c.require_reports(run_jobs(jobs, default_workers()), 1);
  return c;
}

Criterion spectrum_reproduction() {
  Criterion c{8, "tuned spectrum nu in {1,2,3}: 3 levels, rel err <= 1e-6, variational, < 10 s"};
  const auto t0 = std::chrono::steady_clock::now();
  for (int n : {1, 2, 3}) {
    const Rational nu(n);
    const auto r = tuned_spectrum(SpectralConfig{nu, kSpectrumBasis, 0, 3});
    for (std::size_t l = 0; l < 3; ++l) {
      const double cf = closed_form_level(nu, l), e = r.eigenvalues[l];
      const double rel = std::abs(e - cf) / std::abs(cf);
      char buf[160];
      std::snprintf(buf, sizeof buf, "nu=%d level %zu: computed %.15g closed form %.15g rel %.3g", n, l, e, cf, rel);
      c.require(rel <= kSpectrumRelError, buf);
      c.require(e >= cf - kVariationalSlack, std::string(buf) + " below the exact level");
    }
  }
  const double dt = seconds_since(t0);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f s", dt);
  c.require(dt < kSpectrumSeconds, std::string("runtime ") + buf);
  c.title += std::string(" (") + buf + ")";
  return c;
}

Criterion gram_boundary() {
  Criterion c{9, "degree-10 Gram matrix positive definite for nu > 0, not for nu in {0, -1/2}"};
  std::vector<Rational> positive = default_nu_grid();
  for (const auto& q : {Rational(1, 100), Rational(1, 3), Rational(5), Rational(10)}) positive.push_back(q);
  for (const auto& nu : positive)
    c.require(gram_positive_definite(nu, kGramDegree), "not positive definite at nu = " + to_pq(nu));
  for (const auto& nu : {Rational(0), Rational(-1, 2)})
    c.require(!gram_positive_definite(nu, kGramDegree), "positive definite at nu = " + to_pq(nu));
  return c;
}

}  // namespace

int main() {
  bool ok = true;
  for (auto run : {jordan_axioms, structure_relation, tkk_relations, dimension_audit, moment_relations, main_theorem,
                   representation, spectrum_reproduction, gram_boundary}) {
    ok = run().print() && ok;
    std::cout.flush();
  }
  std::cout << (ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << "\n";
  return ok ? 0 : 1;
}
