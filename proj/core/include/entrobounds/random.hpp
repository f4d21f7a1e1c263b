#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "entrobounds/instrument.hpp"
#include "entrobounds/states.hpp"

namespace entrobounds {

// Deterministic source for randomized tests and scenario generation. Same
// seed, same draw sequence, same bits.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}
  double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(gen_); }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(gen_); }
  double exponential() { return std::exponential_distribution<double>(1.0)(gen_); }
  cd cnormal() { return cd(normal(), normal()); }
  uint64_t raw() { return gen_(); }
  int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

 private:
  std::mt19937_64 gen_;
};

// Derive independent sub-seeds from a master seed (splitmix64 step).
uint64_t mix_seed(uint64_t seed, uint64_t stream);

// Square matrix of independent standard complex Gaussians.
Matrix ginibre(Rng& r, int d);

// G G* / Tr(G G*): full rank with probability one.
DensityMatrix random_density(Rng& r, int d);

std::vector<cd> random_pure(Rng& r, int d);

// Dirichlet-uniform weights via normalized exponentials.
ProbVector random_prob(Rng& r, std::vector<std::string> labels);

Ensemble random_ensemble(Rng& r, int d, int n_letters);

// Gaussian Kraus families made trace preserving by right-multiplying every
// operator with S^{-1/2}, S the summed positive part.
Instrument random_instrument(Rng& r, int d, int n_outcomes, int kraus_per_outcome);

}  // namespace entrobounds
