#pragma once

#include <cstdint>

#include "entrobounds/instrument.hpp"

namespace entrobounds {

struct AccessibleInfoResult {
  double value;
  POVM argmax;
  // Certified window: subentropy gap of the ensemble from below, Holevo
  // quantity from above. The returned value always lies inside it (to 1e-9).
  double lower_bracket;
  double upper_bracket;
};

// Best classical information extractable from the ensemble by any single
// measurement, maximized by multi-start coordinate pattern search over
// rank-one POVMs (Bloch angles and weights for qubits, complex frame vectors
// completed by S^{-1/2} in general). Deterministic in seed; nondecreasing in
// restarts. Dimensions above 4 are rejected with DimensionTooLarge; rank-one
// frames need d <= n_outcomes <= d^2.
AccessibleInfoResult accessible_info(const Ensemble& e, int n_outcomes, int restarts,
                                     uint64_t seed, double tol = 1e-6);

// Independent qubit check: best I_c over two-outcome projective measurements
// with axes on a Fibonacci sphere grid. accessible_info must not fall more
// than 1e-6 below this.
double projective_grid_oracle(const Ensemble& e, int grid_size = 10000);

}  // namespace entrobounds
