#pragma once

// Suite orchestration: named jobs run on a worker pool, results assembled in
// key order so output does not depend on scheduling.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "jkep/jordan_checks.hpp"
#include "jkep/phase_checks.hpp"
#include "jkep/report.hpp"
#include "jkep/sl2_rep.hpp"
#include "jkep/spectral.hpp"
#include "jkep/tkk.hpp"

namespace jkep {

struct Job {
  std::string key;
  std::function<Report()> run;
};

/// Runs every job; an exception inside a job becomes a failed "error" relation
/// of that job's report and does not stop the others.
inline std::vector<Report> run_jobs(const std::vector<Job>& jobs, unsigned workers) {
  std::vector<Report> out(jobs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) {
      try {
        out[i] = jobs[i].run();
      } catch (const std::exception& e) {
        out[i] = Report("error", jobs[i].key);
        out[i].fail("error", e.what());
      }
    }
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  std::vector<std::size_t> order(jobs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return jobs[a].key < jobs[b].key; });
  std::vector<Report> sorted;
  for (auto i : order) sorted.push_back(std::move(out[i]));
  return sorted;
}

/// Worker count from JKEP_WORKERS, else the hardware concurrency.
inline unsigned default_workers() {
  if (const char* w = std::getenv("JKEP_WORKERS")) {
    try {
      const long n = std::stol(w);
      if (n >= 1) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
    throw ConfigurationError(std::string("JKEP_WORKERS must be a positive integer, got '") + w + "'");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

inline const std::vector<std::string>& default_algebra_grid() {
  static const std::vector<std::string> grid = {"real", "spin:2", "spin:3", "herm-r:2", "herm-c:2", "herm-r:3", "albert"};
  return grid;
}

inline const std::vector<Rational>& default_nu_grid() {
  static const std::vector<Rational> grid = {Rational(1, 2), Rational(1), Rational(3, 2),
                                             Rational(2),    Rational(3), Rational(7, 2)};
  return grid;
}

enum class Suite { Jordan, StructureRelation, Tkk, Poisson, MainTheorem };

inline std::string suite_key(Suite s) {
  switch (s) {
    case Suite::Jordan: return "jordan";
    case Suite::StructureRelation: return "structure-relation";
    case Suite::Tkk: return "tkk";
    case Suite::Poisson: return "poisson";
    case Suite::MainTheorem: return "main-theorem";
  }
  return "?";
}

inline Job algebra_job(Suite s, const std::string& selector, std::size_t trials, std::uint64_t seed,
                       CheckMode mode = CheckMode::Auto) {
  auto run = [s, selector, trials, seed, mode]() -> Report {
    const auto alg = parse_algebra(selector);
    switch (s) {
      case Suite::Jordan: return verify_jordan(alg, trials, seed);
      case Suite::StructureRelation: return verify_structure_relation(alg, trials, seed);
      case Suite::Tkk: return jacobi_check(alg, trials, seed);
      case Suite::Poisson: return verify_moment_relations(alg, mode, trials, seed);
      case Suite::MainTheorem: return verify_main_theorem_classical(alg, mode, trials, seed);
    }
    throw ConfigurationError("unknown suite");
  };
  return {suite_key(s) + "/" + selector, run};
}

inline Job rep_job(const Rational& nu, std::size_t degree) {
  return {"rep/" + to_pq(nu), [nu, degree] { return rep_check(NuParam(nu), degree); }};
}

inline Job spectrum_job(const SpectralConfig& cfg, bool tune_beta) {
  return {"spectrum/" + to_pq(cfg.nu), [cfg, tune_beta] { return spectrum_report(cfg, tune_beta); }};
}

/// {"ok", "reports": [...]} plus caller-supplied header fields.
inline json assemble(const std::vector<Report>& reports, json header = json::object()) {
  bool ok = !reports.empty();
  json arr = json::array();
  for (const auto& r : reports) {
    ok = ok && r.ok();
    arr.push_back(r.to_json());
  }
  header["ok"] = ok;
  header["reports"] = std::move(arr);
  return header;
}

}  // namespace jkep
