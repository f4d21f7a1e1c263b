#include "entrobounds/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "entrobounds/bounds.hpp"
#include "entrobounds/entropy.hpp"
#include "entrobounds/errors.hpp"
#include "entrobounds/hall.hpp"
#include "entrobounds/instrument.hpp"
#include "entrobounds/random.hpp"
#include "entrobounds/scenarios.hpp"

namespace entrobounds {

namespace {

constexpr double kIneqTol = 1e-9;
constexpr double kExactTol = 1e-10;

struct CheckLog {
  int violations = 0;
  double worst = std::numeric_limits<double>::infinity();

  void ineq(double slack, double tol) {
    worst = std::min(worst, slack);
    if (slack < -tol) ++violations;
  }
  // An identity with residual r is the inequality -r >= -tol.
  void ident(double residual, double tol) { ineq(-residual, tol); }
};

// Deterministic size ladder covering d in {2,3} and 2..4 letters/outcomes.
struct Sizes {
  int d, letters, outcomes, kraus;
};

Sizes sizes_for(int t) {
  return {2 + (t % 2), 2 + (t % 3), 2 + ((t / 3) % 3), 1 + (t % 2)};
}

double chi_of(const std::vector<std::string>& labels, const std::vector<double>& weights,
              const std::vector<DensityMatrix>& states) {
  return chi_quantity(Ensemble(labels, weights, states));
}

SuiteResult uhlmann_suite(uint64_t seed, int trials) {
  CheckLog log;
  for (int t = 0; t < trials; ++t) {
    Rng r(mix_seed(seed, 1000 + t));
    const Sizes z = sizes_for(t);
    const Instrument m = random_instrument(r, z.d, z.outcomes, z.kraus);
    const DensityMatrix rho = random_density(r, z.d);
    const DensityMatrix phi = random_density(r, z.d);
    const double before = q_rel_entropy(rho, phi);
    const double after =
        hybrid_rel_entropy(channel_lambda_i(m, rho), channel_lambda_i(m, phi));
    log.ineq(before - after, kIneqTol);
  }
  return {"uhlmann_monotonicity", trials, log.violations, log.worst};
}

SuiteResult coarse_graining_suite(uint64_t seed, int trials) {
  CheckLog log;
  for (int t = 0; t < trials; ++t) {
    Rng r(mix_seed(seed, 2000 + t));
    const Sizes z = sizes_for(t);
    const Instrument m = random_instrument(r, z.d, z.outcomes, z.kraus);
    const DensityMatrix rho = random_density(r, z.d);
    const DensityMatrix phi = random_density(r, z.d);
    const double mid =
        hybrid_rel_entropy(channel_lambda_i(m, rho), channel_lambda_i(m, phi));
    log.ineq(mid - kl(outcome_probs(m, rho), outcome_probs(m, phi)), kIneqTol);
    log.ineq(mid - q_rel_entropy(a_priori(m, rho), a_priori(m, phi)), kIneqTol);
  }
  return {"coarse_graining_chain", trials, log.violations, log.worst};
}

SuiteResult transpose_suite(uint64_t seed, int trials) {
  CheckLog log;
  for (int t = 0; t < trials; ++t) {
    Rng r(mix_seed(seed, 3000 + t));
    const Sizes z = sizes_for(t);
    const POVM povm = povm_of(random_instrument(r, z.d, z.outcomes, z.kraus));
    const DensityMatrix rho = random_density(r, z.d);
    const DensityMatrix phi = random_density(r, z.d);
    const ProbVector p_rho = outcome_probs(povm, rho);
    try {
      const DensityMatrix back = transpose_channel(povm, phi, p_rho);
      log.ineq(kl(p_rho, outcome_probs(povm, phi)) - q_rel_entropy(back, phi), kIneqTol);
    } catch (const ZeroReferenceProbability&) {
      // Full-rank reference makes this unreachable; not a violation.
    }
  }
  return {"transpose_inequality", trials, log.violations, log.worst};
}

SuiteResult ordering_suite(uint64_t seed, int trials) {
  CheckLog log;
  for (int t = 0; t < trials; ++t) {
    const Sizes z = sizes_for(t);
    const Scenario s =
        random_scenario(mix_seed(seed, 4000 + t), z.d, z.letters, z.outcomes, z.kraus);
    const BoundsReport rep = full_report(s.ensemble, s.instrument);
    for (const InvariantCheck& c : report_invariants(rep)) log.ineq(c.slack, kIneqTol);
  }
  return {"ordering_chain", trials, log.violations, log.worst};
}

void identity_checks(const Scenario& s, CheckLog& log, Rng& aux) {
  const Ensemble& e = s.ensemble;
  const Instrument& m = s.instrument;
  const POVM povm = povm_of(m);
  const DensityMatrix eta = average_state(e);

  const TripartiteReport tri = tripartite_final(e, m);
  for (const MutualEntropyPair* p :
       {&tri.me_02, &tri.me_01, &tri.me_12, &tri.me_02_1, &tri.me_0_12, &tri.me_01_2,
        &tri.me_0_1_2})
    log.ident(std::abs(p->relent - p->chi_expr), kIneqTol);
  log.ident(tri.tensf_residual, kIneqTol);
  log.ident(tri.initmentr_residual, kIneqTol);
  log.ident(tri.idt1_residual, kIneqTol);
  log.ident(tri.idt2_residual, kIneqTol);

  const SwwResult sw = sww(e, m);
  log.ident(std::abs(sw.b_sww - sw.b_sww_symmetric), kIneqTol);

  // Average-state bookkeeping: both decompositions of the final average.
  const DensityMatrix eta_f = a_priori(m, eta);
  Matrix by_letters(e.dim());
  for (int a = 0; a < e.size(); ++a)
    by_letters += e.prior().weight(a) * a_priori(m, e.state(a)).mat();
  log.ident((by_letters - eta_f.mat()).max_abs(), kExactTol);
  Matrix by_outcomes(e.dim());
  const ProbVector p_f = outcome_probs(m, eta);
  const std::vector<ConditionalState> rho_f = a_posteriori_family(m, eta);
  for (int w = 0; w < p_f.size(); ++w) {
    if (p_f.is_zero(w)) continue;
    by_outcomes += p_f.weight(w) * rho_f[w].state.mat();
  }
  log.ident((by_outcomes - eta_f.mat()).max_abs(), kExactTol);

  // Strengthened triangle-type bound: conditioning the final chi on the sent
  // letter costs at most the classical information.
  const double i_c = classical_info(e, povm);
  double mean_letter_chi = 0.0;
  for (int a = 0; a < e.size(); ++a) {
    const ProbVector p_fa = outcome_probs(m, e.state(a));
    const std::vector<ConditionalState> fam = a_posteriori_family(m, e.state(a));
    std::vector<DensityMatrix> states;
    states.reserve(fam.size());
    for (const ConditionalState& c : fam) states.push_back(c.state);
    mean_letter_chi +=
        e.prior().weight(a) * chi_of(m.outcomes(), p_fa.weights(), states);
  }
  std::vector<DensityMatrix> avg_states;
  avg_states.reserve(rho_f.size());
  for (const ConditionalState& c : rho_f) avg_states.push_back(c.state);
  const double chi_final = chi_of(m.outcomes(), p_f.weights(), avg_states);
  log.ineq(i_c + mean_letter_chi - chi_final, kIneqTol);

  std::optional<HallPackage> maybe_pkg;
  try {
    maybe_pkg.emplace(build_hall(e, povm));
  } catch (const SingularAverageState&) {
    return;  // dual identities need an invertible average
  }
  const HallPackage& pkg = *maybe_pkg;

  // Measuring the dual letters with the dual POVM is the original problem
  // read backwards: same classical information.
  log.ident(std::abs(mutual_info_classical(hall_joint(e, povm, pkg)) - i_c), kIneqTol);

  const GammaReport g = gamma_channel_check(e, povm, pkg);
  log.ident(g.joint_residual, kExactTol);
  log.ident(g.product_residual, kExactTol);
  log.ident(g.nlb_match, kIneqTol);
  log.ineq(g.monotonicity_slack, kIneqTol);

  // The eta-transpose of the dual POVM mixes the original letters: feeding it
  // any distribution h returns sum_a h(a) rho(a).
  const ProbVector h = random_prob(aux, e.prior().labels());
  Matrix mixed(e.dim());
  for (int a = 0; a < e.size(); ++a) mixed += h.weight(a) * e.state(a).mat();
  const DensityMatrix back = transpose_channel(pkg.povm_j, eta, h);
  log.ident((back.mat() - mixed).max_abs(), kExactTol);
  for (int a = 0; a < e.size(); ++a)
    log.ident(std::abs(trace_product(pkg.povm_j.element(a), eta.mat()).real() -
                       e.prior().weight(a)),
              kExactTol);
}

SuiteResult identity_suite(uint64_t seed, int trials) {
  CheckLog log;
  for (int t = 0; t < trials; ++t) {
    const Sizes z = sizes_for(t);
    const Scenario s =
        random_scenario(mix_seed(seed, 5000 + t), z.d, z.letters, z.outcomes, z.kraus);
    Rng aux(mix_seed(seed, 5500 + t));
    identity_checks(s, log, aux);
  }
  return {"identities", trials, log.violations, log.worst};
}

SuiteResult groenewold_suite(uint64_t seed, int trials) {
  CheckLog log;
  for (int t = 0; t < trials; ++t) {
    Rng r(mix_seed(seed, 6000 + t));
    const Sizes z = sizes_for(t);
    const bool single = (t % 3) != 2;
    const Instrument m = random_instrument(r, z.d, z.outcomes, single ? 1 : 2);
    const GroenewoldLindbladReport rep =
        groenewold_lindblad_check(m, 40, mix_seed(seed, 6500 + t));
    if (single) {
      log.ineq(rep.pure_preserving ? 0.0 : -1.0, kIneqTol);
      log.ineq(rep.min_iq_mixed, kIneqTol);
    }
    log.ineq(rep.min_gain_bound_slack, kIneqTol);
  }
  return {"groenewold_lindblad", trials, log.violations, log.worst};
}

SuiteResult hall_suite(uint64_t seed, int trials) {
  CheckLog log;
  for (int t = 0; t < trials; ++t) {
    const Sizes z = sizes_for(t);
    const Scenario s =
        random_scenario(mix_seed(seed, 7000 + t), z.d, z.letters, z.outcomes, z.kraus);
    const Ensemble& e = s.ensemble;
    const POVM povm = povm_of(s.instrument);
    const DensityMatrix eta = average_state(e);
    std::optional<HallPackage> maybe_pkg;
    try {
      maybe_pkg.emplace(build_hall(e, povm));
    } catch (const SingularAverageState&) {
      continue;
    }
    const HallPackage& pkg = *maybe_pkg;

    Matrix sum_sigma(e.dim()), sum_xi(e.dim()), sum_eps(e.dim());
    for (size_t w = 0; w < pkg.sigma.size(); ++w) {
      if (pkg.sigma_degenerate[w]) continue;
      sum_sigma += pkg.p_f.weight(static_cast<int>(w)) * pkg.sigma[w].mat();
    }
    for (int a = 0; a < e.size(); ++a)
      sum_xi += e.prior().weight(a) * pkg.xi[a].mat();
    for (size_t w = 0; w < pkg.epsilon.size(); ++w) {
      if (pkg.epsilon_degenerate[w]) continue;
      sum_eps += pkg.p_f.weight(static_cast<int>(w)) * pkg.epsilon[w].mat();
    }
    log.ident((sum_sigma - eta.mat()).max_abs(), kExactTol);
    log.ident((sum_xi - eta.mat()).max_abs(), kExactTol);
    log.ident((sum_eps - eta.mat()).max_abs(), kExactTol);

    // Single-Kraus dual instrument never loses information gain.
    const GroenewoldLindbladReport rep =
        groenewold_lindblad_check(pkg.instrument_j, 20, mix_seed(seed, 7500 + t));
    log.ineq(rep.pure_preserving ? 0.0 : -1.0, kIneqTol);
    log.ineq(rep.min_iq_mixed, kIneqTol);
  }
  return {"hall_construction", trials, log.violations, log.worst};
}

}  // namespace

std::vector<SuiteResult> run_verify_suites(uint64_t seed, int trials) {
  return {uhlmann_suite(seed, trials),   coarse_graining_suite(seed, trials),
          transpose_suite(seed, trials), ordering_suite(seed, trials),
          identity_suite(seed, trials),  groenewold_suite(seed, trials),
          hall_suite(seed, trials)};
}

bool all_pass(const std::vector<SuiteResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const SuiteResult& s) { return s.violations == 0; });
}

}  // namespace entrobounds
