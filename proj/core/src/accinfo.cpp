#include "entrobounds/accinfo.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "entrobounds/bounds.hpp"
#include "entrobounds/entropy.hpp"
#include "entrobounds/errors.hpp"
#include "entrobounds/random.hpp"

namespace entrobounds {

namespace {

// Completions with a smaller least eigenvalue than this are rejected instead
// of amplified by S^{-1/2}.
constexpr double kCompletionFloor = 1e-8;
constexpr double kGoldenAngle = 2.39996322972865332;  // pi (3 - sqrt 5)

std::vector<std::string> numbered(int n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

std::vector<cd> bloch_vector(double theta, double phi) {
  return {cd(std::cos(theta / 2), 0.0), std::polar(std::sin(theta / 2), phi)};
}

// Unnormalized rank-one POVM pieces from the raw parameter vector. Qubits use
// (weight gate, polar, azimuth) triples; larger d uses 2d reals per outcome as
// the components of the frame vector.
std::vector<Matrix> raw_elements(int d, int n, const std::vector<double>& params) {
  std::vector<Matrix> raw;
  raw.reserve(n);
  if (d == 2) {
    for (int k = 0; k < n; ++k) {
      const double g = params[3 * k];
      const std::vector<cd> v = bloch_vector(params[3 * k + 1], params[3 * k + 2]);
      raw.push_back((g * g) * Matrix::outer(v, v));
    }
  } else {
    for (int k = 0; k < n; ++k) {
      std::vector<cd> v(d);
      for (int j = 0; j < d; ++j)
        v[j] = cd(params[2 * d * k + 2 * j], params[2 * d * k + 2 * j + 1]);
      raw.push_back(Matrix::outer(v, v));
    }
  }
  return raw;
}

std::optional<POVM> decode_povm(int d, int n, const std::vector<double>& params) {
  const std::vector<Matrix> raw = raw_elements(d, n, params);
  Matrix s(d);
  for (const Matrix& a : raw) s += a;
  if (eigh(s).eigenvalues.front() < kCompletionFloor) return std::nullopt;
  const Matrix t = inv_sqrt_psd(s);
  std::vector<Matrix> elems;
  elems.reserve(n);
  for (const Matrix& a : raw) {
    // t*a*t is Hermitian in exact arithmetic; near the completion floor the
    // conditioning of t amplifies rounding past the constructor's tolerance,
    // so project back onto the Hermitian part.
    const Matrix m = t * a * t;
    elems.push_back(0.5 * (m + m.adjoint()));
  }
  try {
    return POVM(numbered(n), std::move(elems));
  } catch (const Error&) {
    // A completion too ill-conditioned to validate is as unusable as one
    // below the floor.
    return std::nullopt;
  }
}

double objective(const Ensemble& e, int n, const std::vector<double>& params) {
  const std::optional<POVM> p = decode_povm(e.dim(), n, params);
  if (!p) return -1.0;
  try {
    return classical_info(e, *p);
  } catch (const Error&) {
    return -1.0;
  }
}

struct SearchOutcome {
  double value;
  std::vector<double> params;
};

// Coordinate-wise compass search: probe +/- step along every coordinate, keep
// strict improvements, halve the step after a full sweep without one.
SearchOutcome pattern_search(const Ensemble& e, int n, std::vector<double> params,
                             double tol) {
  double best = objective(e, n, params);
  double step = 0.5;
  int sweeps = 0;
  while (step >= tol && sweeps < 20000) {
    ++sweeps;
    bool improved = false;
    for (size_t i = 0; i < params.size(); ++i) {
      const double saved = params[i];
      for (const double dir : {1.0, -1.0}) {
        params[i] = saved + dir * step;
        const double v = objective(e, n, params);
        if (v > best) {
          best = v;
          improved = true;
          break;
        }
        params[i] = saved;
      }
    }
    if (!improved) step *= 0.5;
  }
  return {best, std::move(params)};
}

struct ProjectiveBest {
  double value;
  double theta;
  double phi;
};

ProjectiveBest best_projective_axis(const Ensemble& e, int grid_size) {
  ProjectiveBest best{-1.0, 0.0, 0.0};
  for (int i = 0; i < grid_size; ++i) {
    const double z = std::clamp(1.0 - (2.0 * i + 1.0) / grid_size, -1.0, 1.0);
    const double theta = std::acos(z);
    const double phi = std::fmod(kGoldenAngle * i, 2.0 * M_PI);
    const std::vector<cd> v = bloch_vector(theta, phi);
    const Matrix p = Matrix::outer(v, v);
    const POVM povm({"0", "1"}, {p, Matrix::identity(2) - p});
    const double val = classical_info(e, povm);
    if (val > best.value) best = {val, theta, phi};
  }
  return best;
}

// Restart 0 is deterministic: the best coarse projective axis for qubits
// (padded with zero-weight outcomes), the standard basis frame otherwise.
// Later restarts draw from their own seeded stream.
std::vector<double> start_params(const Ensemble& e, int n, int restart, uint64_t seed) {
  const int d = e.dim();
  std::vector<double> params;
  if (restart == 0) {
    if (d == 2) {
      const ProjectiveBest g = best_projective_axis(e, 1000);
      params = {1.0, g.theta, g.phi, 1.0, M_PI - g.theta, g.phi + M_PI};
      for (int k = 2; k < n; ++k) {
        params.push_back(0.0);
        params.push_back(M_PI / 2);
        params.push_back(0.0);
      }
    } else {
      params.assign(static_cast<size_t>(2) * d * n, 0.0);
      for (int k = 0; k < n; ++k) params[2 * d * k + 2 * (k % d)] = 1.0;
    }
    return params;
  }
  Rng r(mix_seed(seed, static_cast<uint64_t>(restart)));
  if (d == 2) {
    for (int k = 0; k < n; ++k) {
      params.push_back(0.5 + r.uniform());
      params.push_back(M_PI * r.uniform());
      params.push_back(2.0 * M_PI * r.uniform());
    }
  } else {
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < 2 * d; ++j) params.push_back(r.normal());
  }
  return params;
}

}  // namespace

AccessibleInfoResult accessible_info(const Ensemble& e, int n_outcomes, int restarts,
                                     uint64_t seed, double tol) {
  const int d = e.dim();
  if (d > 4)
    throw DimensionTooLarge("accessible information search handles dimension <= 4, got " +
                            std::to_string(d));
  if (restarts < 1) throw DomainError("accessible information search needs restarts >= 1");
  if (!(tol > 0.0)) throw DomainError("accessible information search needs tol > 0");
  if (n_outcomes < d || n_outcomes > d * d)
    throw DomainError("rank-one POVM search needs d <= n_outcomes <= d^2, got " +
                      std::to_string(n_outcomes));

  double best = -1.0;
  std::vector<double> best_params;
  for (int t = 0; t < restarts; ++t) {
    SearchOutcome out =
        pattern_search(e, n_outcomes, start_params(e, n_outcomes, t, seed), tol);
    if (out.value > best) {
      best = out.value;
      best_params = std::move(out.params);
    }
  }
  const std::optional<POVM> argmax = decode_povm(d, n_outcomes, best_params);
  if (!argmax) throw CheckFailure("optimizer settled on a non-decodable parameter vector");

  const DensityMatrix eta = average_state(e);
  double lower = subentropy(eta);
  for (int a = 0; a < e.size(); ++a)
    lower -= e.prior().weight(a) * subentropy(e.state(a));
  const double upper = holevo(e);
  if (best < lower - 1e-9 || best > upper + 1e-9)
    throw CheckFailure("accessible information estimate left its certified bracket");
  return AccessibleInfoResult{best, *argmax, lower, upper};
}

double projective_grid_oracle(const Ensemble& e, int grid_size) {
  if (e.dim() != 2)
    throw DimensionTooLarge("projective grid oracle is defined for qubits only");
  if (grid_size < 1) throw DomainError("projective grid oracle needs grid_size >= 1");
  return best_projective_axis(e, grid_size).value;
}

}  // namespace entrobounds
