// jkep: command-line driver for the verification suites and the spectral solver.
//
// Exit status: 0 every relation passed, 1 some relation failed, 2 bad configuration.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "jkep/runner.hpp"

namespace {

using namespace jkep;

struct Globals {
  std::uint64_t seed = 1;
  std::string output;
  std::string format = "json";
  unsigned workers = 0;
};

struct VerifyOpts {
  std::string algebra;
  std::size_t trials = 100;
  std::string mode = "auto";
};

void emit(const Globals& g, const std::string& text) {
  if (g.output.empty() || g.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(g.output);
  if (!f) throw ConfigurationError("cannot open output file '" + g.output + "'");
  f << text;
}

std::string render_table(const json& doc) {
  std::ostringstream os;
  for (const auto& r : doc.at("reports")) {
    os << (r.at("ok").get<bool>() ? "PASS " : "FAIL ") << r.at("suite").get<std::string>() << " "
       << r.at("subject").get<std::string>() << "\n";
    for (const auto& [name, t] : r.at("relations").items())
      os << "  " << name << "  pass " << t.at("pass") << "  fail " << t.at("fail") << "\n";
    if (r.contains("info") && r.at("info").contains("levels")) {
      os << "  level  computed  closed_form  abs_error\n";
      for (const auto& l : r.at("info").at("levels"))
        os << "  " << l.at("level") << "  " << l.at("computed") << "  " << l.at("closed_form") << "  "
           << l.at("abs_error") << "\n";
    }
  }
  os << (doc.at("ok").get<bool>() ? "ALL PASS" : "FAILURES PRESENT") << "\n";
  return os.str();
}

int finish(const Globals& g, const std::vector<Report>& reports, json header) {
  header["seed"] = g.seed;
  const json doc = assemble(reports, std::move(header));
  if (g.format == "table")
    emit(g, render_table(doc));
  else
    emit(g, doc.dump(2) + "\n");
  return doc.at("ok").get<bool>() ? 0 : 1;
}

unsigned workers(const Globals& g) { return g.workers ? g.workers : default_workers(); }

int run_verify(const Globals& g, Suite suite, const VerifyOpts& o) {
  parse_algebra(o.algebra);  // reject bad selectors before dispatch
  const CheckMode mode = parse_mode(o.mode);
  std::vector<Job> jobs{algebra_job(suite, o.algebra, o.trials, g.seed, mode)};
  if (suite == Suite::Jordan) jobs.push_back(algebra_job(Suite::StructureRelation, o.algebra, o.trials, g.seed));
  return finish(g, run_jobs(jobs, workers(g)),
                {{"command", "verify-" + suite_key(suite)}, {"algebra", o.algebra}, {"trials", o.trials}});
}

void add_verify_options(CLI::App* sub, VerifyOpts& o) {
  sub->add_option("--algebra", o.algebra, "real | spin:n | herm-r:n | herm-c:n | herm-h:n | albert")->required();
  sub->add_option("--trials", o.trials, "random trials per relation")->capture_default_str();
  sub->add_option("--mode", o.mode, "auto | exact-random | exact-basis | pointwise (phase-space suites)")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact audits of Jordan-algebraic Kepler structures"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "64-bit seed")->envname("JKEP_SEED")->capture_default_str();
  app.add_option("--output,-o", g.output, "write the report here instead of stdout");
  app.add_option("--format", g.format, "json | table")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
  app.add_option("--workers", g.workers, "worker threads (default JKEP_WORKERS or all cores)");

  // verify <suite> and the verify-<suite> spellings
  VerifyOpts vo;
  std::string suite_name;
  auto* verify = app.add_subcommand("verify", "run one verification suite on one algebra");
  verify->add_option("suite", suite_name, "jordan | tkk | poisson | main-theorem")
      ->required()
      ->check(CLI::IsMember({"jordan", "tkk", "poisson", "main-theorem"}));
  add_verify_options(verify, vo);
  const std::vector<std::pair<std::string, Suite>> named = {
      {"jordan", Suite::Jordan}, {"tkk", Suite::Tkk}, {"poisson", Suite::Poisson}, {"main-theorem", Suite::MainTheorem}};
  std::vector<std::pair<CLI::App*, Suite>> aliases;
  for (const auto& [name, s] : named) {
    auto* sub = app.add_subcommand("verify-" + name, "same as: verify " + name);
    add_verify_options(sub, vo);
    aliases.emplace_back(sub, s);
  }

  // rep check
  std::string nu_text;
  std::size_t degree = 20;
  auto* rep = app.add_subcommand("rep", "sl(2,R) representation audits");
  auto* rep_check_cmd = rep->add_subcommand("check", "commutators, hermiticity, lowest weight, Gram positivity");
  rep->require_subcommand(1);
  auto* rep_alias = app.add_subcommand("rep-check", "same as: rep check");
  for (auto* sub : {rep_check_cmd, rep_alias}) {
    sub->add_option("--nu", nu_text, "positive rational, e.g. 3/2")->required();
    sub->add_option("--degree", degree, "highest f_k index checked")->capture_default_str();
  }

  // spectrum
  std::size_t levels = 3, basis = 40;
  std::string beta_text, csv_path;
  bool tune_beta = false, floating = false;
  auto* spec = app.add_subcommand("spectrum", "Rayleigh-Ritz bound-state spectrum of H(nu)");
  spec->add_option("--nu", nu_text, "positive rational")->required();
  spec->add_option("--levels", levels)->capture_default_str();
  spec->add_option("--basis", basis)->capture_default_str();
  spec->add_option("--beta", beta_text, "trial decay rate (default 2/nu), exact decimal or p/q");
  spec->add_option("--csv", csv_path, "also write level,computed,closed_form,abs_error");
  spec->add_flag("--tune-beta", tune_beta, "use beta = 1/(I + nu/2) for level I");
  spec->add_flag("--floating", floating, "floating generalized eigensolve instead of exact orthogonalization");

  // all
  std::size_t all_trials = 100, phase_trials = 50, rep_degree = 20, spec_basis = 24;
  auto* all = app.add_subcommand("all", "every suite over the default algebra grid, rep and spectrum checks");
  all->add_option("--trials", all_trials, "trials for the algebraic suites")->capture_default_str();
  all->add_option("--phase-trials", phase_trials, "trials for poisson and main-theorem")->capture_default_str();
  all->add_option("--degree", rep_degree, "rep check degree")->capture_default_str();
  all->add_option("--basis", spec_basis, "spectrum basis size")->capture_default_str();

  // export
  std::string export_alg;
  auto* exp = app.add_subcommand("export", "structure constants and Gram data as JSON");
  exp->add_option("--algebra", export_alg)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) {
      for (const auto& [name, s] : named)
        if (name == suite_name) return run_verify(g, s, vo);
    }
    for (const auto& [sub, s] : aliases)
      if (sub->parsed()) return run_verify(g, s, vo);

    if (rep_check_cmd->parsed() || rep_alias->parsed()) {
      const NuParam nu(parse_rational(nu_text));
      if (degree < 1) throw ConfigurationError("degree must be at least 1");
      return finish(g, run_jobs({rep_job(nu.value(), degree)}, 1),
                    {{"command", "rep-check"}, {"nu", to_pq(nu.value())}, {"degree", degree}});
    }

    if (spec->parsed()) {
      SpectralConfig cfg{parse_rational(nu_text), basis, beta_text.empty() ? Rational(0) : parse_rational(beta_text),
                         levels, floating ? SolveMode::Floating : SolveMode::ExactOrthogonalization};
      if (!beta_text.empty() && cfg.beta <= 0) throw ConfigurationError("beta must be positive");
      cfg.validate();
      const Report r = spectrum_report(cfg, tune_beta);
      if (!csv_path.empty()) {
        std::ofstream f(csv_path);
        if (!f) throw ConfigurationError("cannot open csv file '" + csv_path + "'");
        f << "level,computed,closed_form,abs_error\n";
        char line[160];
        for (const auto& l : r.info().at("levels")) {
          std::snprintf(line, sizeof line, "%d,%.17g,%.17g,%.17g\n", l.at("level").get<int>(),
                        l.at("computed").get<double>(), l.at("closed_form").get<double>(),
                        l.at("abs_error").get<double>());
          f << line;
        }
      }
      return finish(g, {r}, {{"command", "spectrum"}, {"nu", to_pq(cfg.nu)}});
    }

    if (all->parsed()) {
      std::vector<Job> jobs;
      for (const auto& sel : default_algebra_grid()) {
        for (Suite s : {Suite::Jordan, Suite::StructureRelation, Suite::Tkk})
          jobs.push_back(algebra_job(s, sel, all_trials, g.seed));
        for (Suite s : {Suite::Poisson, Suite::MainTheorem}) jobs.push_back(algebra_job(s, sel, phase_trials, g.seed));
      }
      for (const auto& nu : default_nu_grid()) jobs.push_back(rep_job(nu, rep_degree));
      for (int nu : {1, 2, 3}) jobs.push_back(spectrum_job(SpectralConfig{Rational(nu), spec_basis, 0, 3}, true));
      return finish(g, run_jobs(jobs, workers(g)), {{"command", "all"}});
    }

    if (exp->parsed()) {
      const auto alg = parse_algebra(export_alg);
      emit(g, algebra_to_json(*alg).dump(2) + "\n");
      return 0;
    }
  } catch (const ConfigurationError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const DimensionError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
