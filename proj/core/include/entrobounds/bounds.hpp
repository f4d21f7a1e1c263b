#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "entrobounds/entropy.hpp"
#include "entrobounds/hall.hpp"
#include "entrobounds/instrument.hpp"

namespace entrobounds {

// Shannon information between letters and outcomes of the measured ensemble.
double classical_info(const Ensemble& e, const POVM& povm);

// Holevo bound chi{p, rho}.
double holevo(const Ensemble& e);

struct SwwResult {
  double b_sww;           // chi{p, rho} - sum_w p_f(w) chi of the a-posteriori ensemble at w
  double b_sww_symmetric; // chi{p, rho} + chi{p_f, rho_f} - chi{p_if, rho_f^letter}
  double mean_apost_chi;  // the subtracted average
};

// Schumacher-Westmoreland-Wootters bound, computed in its difference form and
// in the symmetric three-chi form; the two are checked against each other to
// 1e-9.
SwwResult sww(const Ensemble& e, const Instrument& m);

// Quantum information gain S(eta) - sum_w p(w) S(a-posteriori state at w).
// Negative values are possible for general instruments.
double iq_gain(const Instrument& m, const DensityMatrix& eta);

struct GroenewoldLindbladReport {
  // True when every a-posteriori state of a random pure input stayed pure
  // (von Neumann entropy at most 1e-9); exactly the instruments whose
  // information gain is nonnegative on every input.
  bool pure_preserving;
  double max_apost_entropy;  // classification statistic over pure inputs
  double min_iq_mixed;       // smallest gain seen on random mixed inputs
  // Smallest slack of the gain form of the information bound,
  // [Iq(eta) - sum_a p(a) Iq(rho(a))] - I_c, over random ensembles.
  double min_gain_bound_slack;
  int trials;
};

GroenewoldLindbladReport groenewold_lindblad_check(const Instrument& m, int trials,
                                                   uint64_t seed);

// Lower bounds from the dual package: (chi{p, xi}, chi{p_f, epsilon}).
std::pair<double, double> lower_bounds(const Ensemble& e, const POVM& povm,
                                       const HallPackage& pkg);

struct HallBounds {
  double b_hall;     // chi{p_f, sigma}
  double b_nub;      // chi{p, rho} - sum_w p_f(w) Iq(sigma(w); J)
  double mean_iq_j;  // the subtracted average; each term is checked >= -1e-9
};

// Hall bound and the gain-corrected upper bound. Also checks the anchor
// identity Iq(eta; J) = chi{p, rho} to 1e-9.
HallBounds hall_and_nub(const Ensemble& e, const Instrument& m, const HallPackage& pkg);

// The two signed estimates: b1 from the a-priori letter states, b2 from the
// dual a-posteriori states. Both are at most I_c but can go negative.
std::pair<double, double> b1_b2(const Ensemble& e, const Instrument& m, const HallPackage& pkg);

struct MutualEntropyPair {
  double relent;    // relative-entropy definition on the block state
  double chi_expr;  // closed chi-expression for the same quantity
};

struct TripartiteReport {
  TripartiteState state;
  // Mutual entropies of the final tripartite state between the marked
  // subsystems (0 input letter, 1 quantum system, 2 outcome).
  MutualEntropyPair me_02, me_01, me_12, me_02_1, me_0_12, me_01_2, me_0_1_2;
  double tensf_residual;      // instrument applied blockwise vs final marginals
  double initmentr_residual;  // initial-time mutual entropy vs chi{p, rho}
  double idt1_residual;       // chi{p_if, .} split along outcomes
  double idt2_residual;       // chi{p_if, .} split along letters
};

// Builds the final-time tripartite state and evaluates every mutual entropy
// both ways, together with the bookkeeping identities between them.
TripartiteReport tripartite_final(const Ensemble& e, const Instrument& m);

struct GammaReport {
  double joint_residual;    // max | Gamma[p_if](a) - p(a) xi(a) | entrywise
  double product_residual;  // max | Gamma[p x p_f](a) - p(a) eta | entrywise
  double nlb_match;         // | S(Gamma[p_if] || Gamma[p x p_f]) - chi{p, xi} |
  double monotonicity_slack;  // I_c - S(Gamma[p_if] || Gamma[p x p_f])
};

// The classical-to-hybrid channel f -> sum_w f(., w) sigma(w) that carries
// the dual letter states; feeding it the joint and the product of marginals
// reproduces xi and eta and turns I_c monotonicity into the chi{p, xi} lower
// bound.
GammaReport gamma_channel_check(const Ensemble& e, const POVM& povm, const HallPackage& pkg);

struct BoundsReport {
  double i_c = 0;
  double b_hlv = 0;
  double b_sww = 0;
  double b_hall = 0;
  double b_nub = 0;
  double b_nlb = 0;
  double b_scu = 0;
  double b_subent = 0;
  double b1 = 0;
  double b2 = 0;
  double iq_eta = 0;          // information gain of the instrument on the average state
  double mean_apost_chi = 0;  // diagnostic from the SWW form
  double mean_iq_j = 0;       // diagnostic from the dual-gain form
  // False when the average state is singular; the dual-package numbers
  // (b_hall, b_nub, b_nlb, b_scu, b2, mean_iq_j) are NaN then.
  bool hall_available = true;
  bool zero_prob_flagged = false;  // some outcome or joint cell had zero probability
};

BoundsReport full_report(const Ensemble& e, const Instrument& m);

struct InvariantCheck {
  std::string name;
  double slack;  // >= 0 when the inequality holds exactly
  bool pass;     // slack >= -1e-9
};

// The ordering lattice of the report: lower bounds below I_c, I_c below each
// upper bound, upper bounds in their proven order.
std::vector<InvariantCheck> report_invariants(const BoundsReport& r);

}  // namespace entrobounds
