// Command-line front end: bound reports, figure-data sweeps, the randomized
// property suites, and the accessible-information solver.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "entrobounds/accinfo.hpp"
#include "entrobounds/bounds.hpp"
#include "entrobounds/errors.hpp"
#include "entrobounds/scenario_io.hpp"
#include "entrobounds/scenarios.hpp"
#include "entrobounds/verify.hpp"

namespace eb = entrobounds;

namespace {

// 12 significant digits; infinities render as inf/-inf so CSV consumers can
// parse them back.
std::string fmt_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

eb::Scenario resolve_scenario(const std::string& file, const std::string& builtin,
                              double x, bool x_given) {
  if (!builtin.empty()) {
    if (!x_given) throw eb::DomainError("--builtin requires --x");
    return eb::builtin_scenario(builtin, x);
  }
  if (file.empty()) throw eb::DomainError("give a scenario file or --builtin NAME --x V");
  return eb::load_scenario(file);
}

int cmd_bounds(const eb::Scenario& s) {
  const eb::BoundsReport r = eb::full_report(s.ensemble, s.instrument);
  std::cout << "scenario: " << s.name;
  for (const auto& [key, value] : s.parameters)
    std::cout << "  " << key << " = " << fmt_real(value);
  std::cout << "\n";
  std::cout << "dimension: " << s.ensemble.dim()
            << "  letters: " << s.ensemble.size()
            << "  outcomes: " << s.instrument.outcomes().size() << "\n\n";

  const auto row = [](const char* name, double v) {
    std::printf("%-10s = %s\n", name, fmt_real(v).c_str());
  };
  row("I_c", r.i_c);
  row("B_Hlv", r.b_hlv);
  row("B_SWW", r.b_sww);
  row("B_Hall", r.b_hall);
  row("B_nub", r.b_nub);
  row("b_nlb", r.b_nlb);
  row("b_Scu", r.b_scu);
  row("b_subent", r.b_subent);
  row("b1", r.b1);
  row("b2", r.b2);
  row("I_q(eta)", r.iq_eta);
  if (!r.hall_available)
    std::cout << "note: average state singular; dual-instrument bounds unavailable\n";
  if (r.zero_prob_flagged)
    std::cout << "note: zero-probability outcome encountered; affected terms dropped\n";

  std::cout << "\n";
  const auto checks = eb::report_invariants(r);
  int passed = 0;
  for (const auto& c : checks) {
    std::printf("[%s] %-16s slack = %s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                fmt_real(c.slack).c_str());
    if (c.pass) ++passed;
  }
  std::printf("invariants: %d/%zu passed\n", passed, checks.size());
  return passed == static_cast<int>(checks.size()) ? 0 : 1;
}

int cmd_sweep(const std::string& builtin, double from, double to, double step,
              const std::string& out_path) {
  if (step <= 0) throw eb::DomainError("--step must be positive");
  if (to < from) throw eb::DomainError("--to must be >= --from");
  std::ofstream out(out_path);
  if (!out) throw eb::IoError("cannot write " + out_path);
  out << "x,I_c,B_Hlv,B_SWW,B_Hall,B_nub,b_nlb,b_Scu,b_subent,b1,b2\n";
  // Indexed grid keeps x ascending and free of drift; the end point is
  // included when it lands on the grid (within half a step of rounding).
  const long n = static_cast<long>(std::floor((to - from) / step + 1e-9));
  for (long k = 0; k <= n; ++k) {
    const double x = from + static_cast<double>(k) * step;
    const eb::Scenario s = eb::builtin_scenario(builtin, x);
    const eb::BoundsReport r = eb::full_report(s.ensemble, s.instrument);
    const double cols[] = {x,       r.i_c,  r.b_hlv,     r.b_sww, r.b_hall, r.b_nub,
                           r.b_nlb, r.b_scu, r.b_subent, r.b1,    r.b2};
    for (size_t i = 0; i < std::size(cols); ++i)
      out << (i ? "," : "") << fmt_real(cols[i]);
    out << "\n";
  }
  if (!out.good()) throw eb::IoError("write failed on " + out_path);
  return 0;
}

int cmd_verify(std::uint64_t seed, int trials) {
  const auto results = eb::run_verify_suites(seed, trials);
  std::printf("seed = %llu  trials per suite = %d\n\n",
              static_cast<unsigned long long>(seed), trials);
  for (const auto& r : results)
    std::printf("%-24s trials = %-6d violations = %-4d worst slack = %s\n",
                r.name.c_str(), r.trials, r.violations, fmt_real(r.worst_slack).c_str());
  const bool ok = eb::all_pass(results);
  std::printf("\n%s\n", ok ? "all suites passed" : "violations detected");
  return ok ? 0 : 1;
}

int cmd_accinfo(const eb::Scenario& s, int outcomes, int restarts, std::uint64_t seed) {
  const int d = s.ensemble.dim();
  if (outcomes <= 0) outcomes = d * d;
  const eb::AccessibleInfoResult res =
      eb::accessible_info(s.ensemble, outcomes, restarts, seed);
  std::cout << "accessible information >= " << fmt_real(res.value) << "\n";
  std::cout << "bracket: [" << fmt_real(res.lower_bracket) << ", "
            << fmt_real(res.upper_bracket) << "]\n";
  std::cout << "optimal POVM (" << res.argmax.n_outcomes() << " outcomes):\n";
  for (int w = 0; w < res.argmax.n_outcomes(); ++w) {
    std::cout << res.argmax.outcome(w) << ":\n";
    std::cout << eb::serialize_matrix(res.argmax.element(w), 2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entropic bounds on classical information transmitted through "
               "quantum instruments"};
  app.require_subcommand(1);

  std::string file, builtin, out_path;
  double x = 0, from = 0, to = 0, step = 0.05;
  bool x_given = false;
  std::uint64_t seed = 1;
  int trials = 100, outcomes = 0, restarts = 12;

  CLI::App* bounds = app.add_subcommand("bounds", "report every bound and the ordering invariants");
  bounds->add_option("file", file, "scenario file (JSON)");
  bounds->add_option("--builtin", builtin, "builtin scenario name (example_A | example_B)");
  bounds->add_option("--x", x, "time parameter for --builtin")->each([&](const std::string&) { x_given = true; });

  CLI::App* sweep = app.add_subcommand("sweep", "write bound curves over a parameter grid as CSV");
  sweep->add_option("--builtin", builtin, "builtin scenario name")->required();
  sweep->add_option("--from", from, "grid start")->required();
  sweep->add_option("--to", to, "grid end")->required();
  sweep->add_option("--step", step, "grid step (> 0)")->required();
  sweep->add_option("--out", out_path, "output CSV path")->required();

  CLI::App* verify = app.add_subcommand("verify", "run the randomized property suites");
  verify->add_option("--seed", seed, "base seed");
  verify->add_option("--trials", trials, "trials per suite (>= 1)");

  CLI::App* accinfo = app.add_subcommand("accinfo", "maximize extracted information over POVMs");
  accinfo->add_option("file", file, "scenario file (JSON)");
  accinfo->add_option("--builtin", builtin, "builtin scenario name");
  accinfo->add_option("--x", x, "time parameter for --builtin")->each([&](const std::string&) { x_given = true; });
  accinfo->add_option("--outcomes", outcomes, "POVM outcome count (default d^2)");
  accinfo->add_option("--restarts", restarts, "optimizer restarts");
  accinfo->add_option("--seed", seed, "optimizer seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (bounds->parsed()) return cmd_bounds(resolve_scenario(file, builtin, x, x_given));
    if (sweep->parsed()) return cmd_sweep(builtin, from, to, step, out_path);
    if (verify->parsed()) {
      if (trials < 1) throw eb::DomainError("--trials must be >= 1");
      return cmd_verify(seed, trials);
    }
    if (accinfo->parsed())
      return cmd_accinfo(resolve_scenario(file, builtin, x, x_given), outcomes, restarts, seed);
  } catch (const eb::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const eb::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const eb::UnknownOutcome& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const eb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
