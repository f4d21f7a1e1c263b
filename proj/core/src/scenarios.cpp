#include "entrobounds/scenarios.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "entrobounds/errors.hpp"
#include "entrobounds/random.hpp"

namespace entrobounds {

namespace {

std::vector<std::string> numbered_labels(int n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

double norm2(const std::vector<cd>& v) {
  double s = 0.0;
  for (const cd& z : v) s += std::norm(z);
  return s;
}

void require_time(double x) {
  if (!(x >= 0.0)) throw DomainError("time parameter x must be >= 0, got " + std::to_string(x));
}

}  // namespace

Scenario rank_one_scenario(const std::vector<std::string>& outcomes,
                           const std::vector<double>& mu,
                           const std::vector<std::vector<cd>>& psi,
                           const std::vector<std::vector<std::vector<cd>>>& phi,
                           const Ensemble& e) {
  const size_t n = outcomes.size();
  if (mu.size() != n || psi.size() != n || phi.size() != n)
    throw DimensionMismatch("rank-one scenario: outcomes, mu, psi, phi must have equal length");
  const int d = e.dim();
  Matrix resolved(d);
  for (size_t w = 0; w < n; ++w) {
    if (static_cast<int>(psi[w].size()) != d)
      throw DimensionMismatch("rank-one scenario: psi[" + std::to_string(w) +
                              "] has wrong dimension");
    if (std::abs(norm2(psi[w]) - 1.0) > 1e-10)
      throw NormalizationError("rank-one scenario: psi[" + std::to_string(w) +
                               "] is not a unit vector");
    if (mu[w] < 0.0)
      throw NormalizationError("rank-one scenario: mu[" + std::to_string(w) + "] is negative");
    double phi_mass = 0.0;
    for (const auto& v : phi[w]) {
      if (static_cast<int>(v.size()) != d)
        throw DimensionMismatch("rank-one scenario: phi[" + std::to_string(w) +
                                "] has wrong dimension");
      phi_mass += norm2(v);
    }
    if (std::abs(phi_mass - mu[w]) > 1e-10)
      throw NormalizationError("rank-one scenario: sum_k |phi_k(" + outcomes[w] +
                               ")|^2 does not match mu");
    resolved += mu[w] * Matrix::outer(psi[w], psi[w]);
  }
  resolved -= Matrix::identity(d);
  if (resolved.max_abs() > 1e-10)
    throw NormalizationError("rank-one scenario: sum mu(w) |psi(w)><psi(w)| is not the identity");

  std::vector<Operation> ops;
  ops.reserve(n);
  for (size_t w = 0; w < n; ++w) {
    Operation op;
    for (const auto& v : phi[w]) op.kraus.push_back(Matrix::outer(v, psi[w]));
    ops.push_back(std::move(op));
  }
  return Scenario{e, Instrument(outcomes, std::move(ops)), "rank_one", {}};
}

Scenario von_neumann_scenario(const Ensemble& e) {
  const DensityMatrix eta = average_state(e);
  const Spectrum s = eigh(eta.mat());
  const int d = eta.dim();
  std::vector<Operation> ops;
  ops.reserve(d);
  // eigh sorts ascending; walk columns backwards so label "0" gets the
  // largest eigenvalue.
  for (int k = d - 1; k >= 0; --k) {
    std::vector<cd> v(d);
    for (int r = 0; r < d; ++r) v[r] = s.eigenvectors(r, k);
    cd phase(1.0, 0.0);
    for (int r = 0; r < d; ++r) {
      if (std::abs(v[r]) > kSupportTol) {
        phase = v[r] / std::abs(v[r]);
        break;
      }
    }
    for (cd& z : v) z /= phase;
    ops.push_back(Operation{{Matrix::outer(v, v)}});
  }
  return Scenario{e, Instrument(numbered_labels(d), std::move(ops)), "von_neumann", {}};
}

Ensemble example_a_ensemble() {
  // Basis: index 0 the excited state, index 1 the ground state.
  const DensityMatrix ground(Matrix::from_rows({{0.0, 0.0}, {0.0, 1.0}}));
  const DensityMatrix plus(Matrix::from_rows({{0.5, 0.5}, {0.5, 0.5}}));
  return Ensemble({"0", "1"}, {0.5, 0.5}, {ground, plus});
}

Ensemble example_b_ensemble() {
  const DensityMatrix ground(Matrix::from_rows({{0.0, 0.0}, {0.0, 1.0}}));
  const DensityMatrix tilted(
      Matrix::from_rows({{9.0 / 20, 9.0 / 20}, {9.0 / 20, 11.0 / 20}}));
  return Ensemble({"0", "1"}, {4.0 / 9, 5.0 / 9}, {ground, tilted});
}

Scenario two_level_example_a(double x) {
  require_time(x);
  const double q = std::exp(-x);
  // No emission seen: coherent no-jump evolution only.
  Operation quiet{{Matrix::from_rows({{std::sqrt(q), 0.0}, {0.0, 1.0}})}};
  // Emission seen: jump from the excited to the ground state.
  Operation click{{std::sqrt(1.0 - q) * Matrix::from_rows({{0.0, 0.0}, {1.0, 0.0}})}};
  return Scenario{example_a_ensemble(),
                  Instrument({"0", "1"}, {std::move(quiet), std::move(click)}),
                  "example_A",
                  {{"x", x}}};
}

Scenario two_level_example_b(double x) {
  require_time(x);
  const double q = std::exp(-x);
  const Matrix eye = Matrix::identity(2);
  // Detector efficiency 49/50: the unseen fraction of each branch leaks into
  // the other outcome as an identity Kraus operator.
  Operation quiet{{std::sqrt(49.0 / 50) * Matrix::from_rows({{std::sqrt(q), 0.0}, {0.0, 1.0}}),
                   std::sqrt(q / 50) * eye}};
  Operation click{{std::sqrt(49.0 * (1.0 - q) / 50) * Matrix::from_rows({{0.0, 0.0}, {1.0, 0.0}}),
                   std::sqrt((1.0 - q) / 50) * eye}};
  return Scenario{example_b_ensemble(),
                  Instrument({"0", "1"}, {std::move(quiet), std::move(click)}),
                  "example_B",
                  {{"x", x}}};
}

Scenario builtin_scenario(const std::string& name, double x) {
  if (name == "example_A") return two_level_example_a(x);
  if (name == "example_B") return two_level_example_b(x);
  throw UnknownOutcome("unknown builtin scenario: " + name);
}

Scenario random_scenario(uint64_t seed, int d, int n_letters, int n_outcomes,
                         int kraus_per_outcome) {
  if (d < 1 || n_letters < 1 || n_outcomes < 1 || kraus_per_outcome < 1)
    throw DomainError("random scenario: all sizes must be positive");
  Rng r(seed);
  // Draw the ensemble before the instrument; changing this order changes
  // every seeded scenario.
  Ensemble e = random_ensemble(r, d, n_letters);
  Instrument m = random_instrument(r, d, n_outcomes, kraus_per_outcome);
  return Scenario{std::move(e), std::move(m), "random", {}};
}

}  // namespace entrobounds
