#pragma once

#include <string>
#include <vector>

#include "entrobounds/instrument.hpp"

namespace entrobounds {

// Dual reading of a measured ensemble {p, rho} with POVM E: the measurement
// side becomes an instrument J acting over the input alphabet, built from
// M(a) = sqrt(p(a)) rho(a)^{1/2} eta^{-1/2} with eta the average state, while
// the letters of the dual problem are sigma(w), the outcome states of the
// original POVM. Swapping roles this way leaves the classical mutual
// information unchanged and is what the Hall-type upper and lower bounds are
// made of. Requires eta to be invertible.
struct HallPackage {
  Instrument instrument_j;  // single Kraus M(a) per letter
  POVM povm_j;              // E_J(a) = M(a)* M(a) = p(a) eta^{-1/2} rho(a) eta^{-1/2}

  std::vector<std::string> letters;   // sorted input alphabet
  std::vector<std::string> outcomes;  // sorted outcomes of the original POVM
  ProbVector p_f;                     // outcome distribution on the average state

  // sigma(w) = eta^{1/2} E(w) eta^{1/2} / p_f(w)
  std::vector<DensityMatrix> sigma;
  std::vector<bool> sigma_degenerate;
  // xi(a) = sum_w p(w|a) sigma(w): dual a-priori letter states
  std::vector<DensityMatrix> xi;
  // epsilon(w) = sum_a p(a|w) rho(a): retrodicted letter mixtures
  std::vector<DensityMatrix> epsilon;
  std::vector<bool> epsilon_degenerate;
  // eta_j(w) = J(A)[sigma(w)] = sum_a (p(a)/p_f(w)) rho(a)^{1/2} E(w) rho(a)^{1/2}
  std::vector<DensityMatrix> eta_j;
  std::vector<bool> eta_j_degenerate;
};

// Throws SingularAverageState when the average state has an eigenvalue at or
// below the invertibility threshold.
HallPackage build_hall(const Ensemble& e, const POVM& povm);

// Joint distribution of the dual problem: rows are the original outcomes
// (the dual letters), columns the original letters (the dual outcomes),
// entry p_f(w) Tr{E_J(a) sigma(w)}. Cross-checked against the transpose of
// the original joint to 1e-10.
JointDistribution hall_joint(const Ensemble& e, const POVM& povm, const HallPackage& pkg);

}  // namespace entrobounds
