#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "entrobounds/instrument.hpp"

namespace entrobounds {

// A transmission problem: which ensemble is sent and which instrument reads
// it out.
struct Scenario {
  Ensemble ensemble;
  Instrument instrument;
  std::string name;
  std::map<std::string, double> parameters;
};

// Instrument with one rank-one family per outcome: Kraus operators
// |phi_k(w)><psi(w)| with sum_w mu(w) |psi(w)><psi(w)| = 1 and
// sum_k |phi_k(w)|^2 = mu(w). The POVM is mu(w)|psi(w)><psi(w)| and the
// a-posteriori states do not depend on the input.
Scenario rank_one_scenario(const std::vector<std::string>& outcomes,
                           const std::vector<double>& mu,
                           const std::vector<std::vector<cd>>& psi,
                           const std::vector<std::vector<std::vector<cd>>>& phi,
                           const Ensemble& e);

// Projective measurement of the eigenbasis of the average state, eigenvectors
// ordered by descending eigenvalue with the first sizable component rotated
// real positive. Outcome "0" is the largest eigenvalue. For ensembles whose
// letters share their diagonal in that basis (the two built-in examples do)
// this measurement extracts zero classical information.
Scenario von_neumann_scenario(const Ensemble& e);

// Two-level atom read out by counting emitted photons up to a scaled time x:
// outcome "1" is a detected emission (decay into the ground state), outcome
// "0" is no detection, which includes the decayed-but-unseen part. Letters:
// "0" the ground state, "1" the symmetric superposition, equal priors.
Scenario two_level_example_a(double x);

// Same atom and detection, with detector efficiency 49/50, letter "1" moved
// slightly off the symmetric superposition and prior (4/9, 5/9).
Scenario two_level_example_b(double x);

Ensemble example_a_ensemble();
Ensemble example_b_ensemble();

// Dispatch by builtin name ("example_A" | "example_B") with the time
// parameter x. Throws UnknownOutcome for other names.
Scenario builtin_scenario(const std::string& name, double x);

// Deterministic random scenario: Dirichlet prior, Ginibre letter states,
// Gaussian Kraus instrument. Same seed, same scenario, bit for bit.
Scenario random_scenario(uint64_t seed, int d, int n_letters, int n_outcomes,
                         int kraus_per_outcome);

}  // namespace entrobounds
