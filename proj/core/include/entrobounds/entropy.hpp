#pragma once

#include <vector>

#include "entrobounds/states.hpp"

namespace entrobounds {

// Every entropy in this library is in bits (base-2 logarithms), with the
// usual convention 0 log 0 = 0. Relative entropies return +infinity on a
// support violation; finite results are clamped to 0 when they land within
// -1e-12 of it by roundoff.

double vn_entropy(const DensityMatrix& rho);

// S(rho1 || rho2) evaluated on the eigenbasis of rho2. The support of rho2
// is the set of eigenvalues above kSupportTol; mass of rho1 outside it beyond
// 1e-9 makes the result +infinity.
double q_rel_entropy(const DensityMatrix& rho1, const DensityMatrix& rho2);

double shannon(const ProbVector& p);

// Kullback-Leibler divergence; the label sets must coincide.
double kl(const ProbVector& p1, const ProbVector& p2);

double hybrid_entropy(const HybridState& s);

double hybrid_rel_entropy(const HybridState& s1, const HybridState& s2);

// Relative entropy between two positive block families compared position by
// position (the multipartite states of the bounds module keep their blocks
// unnormalized, so this works directly on matrices).
double rel_entropy_blocks(const std::vector<Matrix>& a, const std::vector<Matrix>& b);

// I(input; outcome) of a joint distribution.
double mutual_info_classical(const JointDistribution& j);

// Holevo quantity chi of the ensemble. Computed as the entropy gap
// S(average) - sum_a p(a) S(rho(a)) and cross-checked against the
// average relative entropy sum_a p(a) S(rho(a) || average); disagreement
// beyond 1e-10 raises CheckFailure.
double chi_quantity(const Ensemble& e);

// Subentropy, the sharp measurement-independent lower bound on accessible
// information. Near-degenerate spectra (gap below 1e-7) are evaluated through
// confluent divided differences of -x^d log2 x, the analytic limit of the
// product formula.
double subentropy(const DensityMatrix& rho);

}  // namespace entrobounds
