#include "entrobounds/random.hpp"

#include <cmath>
#include <utility>

#include "entrobounds/errors.hpp"

namespace entrobounds {

uint64_t mix_seed(uint64_t seed, uint64_t stream) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

Matrix ginibre(Rng& r, int d) {
  Matrix g(d);
  for (int row = 0; row < d; ++row)
    for (int col = 0; col < d; ++col) g(row, col) = r.cnormal();
  return g;
}

DensityMatrix random_density(Rng& r, int d) {
  const Matrix g = ginibre(r, d);
  Matrix m = g * g.adjoint();
  m *= cd(1.0 / m.trace().real(), 0.0);
  return DensityMatrix(m);
}

std::vector<cd> random_pure(Rng& r, int d) {
  std::vector<cd> v(d);
  double n2 = 0.0;
  for (cd& z : v) {
    z = r.cnormal();
    n2 += std::norm(z);
  }
  const double inv = 1.0 / std::sqrt(n2);
  for (cd& z : v) z *= inv;
  return v;
}

ProbVector random_prob(Rng& r, std::vector<std::string> labels) {
  std::vector<double> w(labels.size());
  double sum = 0.0;
  for (double& x : w) {
    x = r.exponential();
    sum += x;
  }
  for (double& x : w) x /= sum;
  return ProbVector(std::move(labels), std::move(w));
}

namespace {

std::vector<std::string> numbered_labels(int n) {
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return labels;
}

}  // namespace

Ensemble random_ensemble(Rng& r, int d, int n_letters) {
  std::vector<double> prior(n_letters);
  double sum = 0.0;
  for (double& x : prior) {
    x = r.exponential();
    sum += x;
  }
  for (double& x : prior) x /= sum;
  std::vector<DensityMatrix> states;
  states.reserve(n_letters);
  for (int i = 0; i < n_letters; ++i) states.push_back(random_density(r, d));
  return Ensemble(numbered_labels(n_letters), std::move(prior), std::move(states));
}

Instrument random_instrument(Rng& r, int d, int n_outcomes, int kraus_per_outcome) {
  std::vector<std::vector<Matrix>> raw(n_outcomes);
  Matrix s(d);
  for (int w = 0; w < n_outcomes; ++w)
    for (int k = 0; k < kraus_per_outcome; ++k) {
      Matrix v = ginibre(r, d);
      s += v.adjoint() * v;
      raw[w].push_back(std::move(v));
    }
  const Matrix correction = inv_sqrt_psd(s);
  std::vector<Operation> ops(n_outcomes);
  for (int w = 0; w < n_outcomes; ++w)
    for (Matrix& v : raw[w]) ops[w].kraus.push_back(v * correction);
  return Instrument(numbered_labels(n_outcomes), std::move(ops));
}

}  // namespace entrobounds
