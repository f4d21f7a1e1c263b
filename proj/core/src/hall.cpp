#include "entrobounds/hall.hpp"

#include <cmath>
#include <utility>

#include "entrobounds/errors.hpp"

namespace entrobounds {

HallPackage build_hall(const Ensemble& e, const POVM& povm) {
  if (e.dim() != povm.dim()) throw DimensionMismatch("ensemble and POVM of different dimensions");
  const DensityMatrix eta = average_state(e);
  Matrix inv_root(e.dim());
  try {
    inv_root = inv_sqrt_psd(eta.mat());
  } catch (const NotInvertible&) {
    throw SingularAverageState("average state is not invertible, no dual instrument exists");
  }
  const Matrix root = sqrt_psd(eta.mat());

  std::vector<Matrix> letter_roots;
  letter_roots.reserve(e.size());
  for (int a = 0; a < e.size(); ++a) letter_roots.push_back(sqrt_psd(e.state(a).mat()));

  std::vector<Operation> ops(e.size());
  for (int a = 0; a < e.size(); ++a)
    ops[a].kraus.push_back(std::sqrt(e.prior().weight(a)) * (letter_roots[a] * inv_root));
  Instrument instrument_j(e.prior().labels(), std::move(ops));
  POVM povm_j = povm_of(instrument_j);

  const ProbVector p_f = outcome_probs(povm, eta);
  const int n_w = povm.n_outcomes();

  std::vector<DensityMatrix> sigma;
  std::vector<bool> sigma_degenerate(n_w, false);
  for (int w = 0; w < n_w; ++w) {
    if (p_f.is_zero(w)) {
      sigma_degenerate[w] = true;
      sigma.push_back(DensityMatrix::maximally_mixed(e.dim()));
    } else {
      sigma.push_back(DensityMatrix((1.0 / p_f.weight(w)) * (root * povm.element(w) * root)));
    }
  }

  std::vector<DensityMatrix> xi;
  for (int a = 0; a < e.size(); ++a) {
    Matrix m(e.dim());
    for (int w = 0; w < n_w; ++w) {
      if (sigma_degenerate[w]) continue;
      const double cond = trace_product(povm.element(w), e.state(a).mat()).real();
      if (cond <= kZeroProb) continue;
      m += cond * sigma[w].mat();
    }
    xi.push_back(DensityMatrix(m));
  }

  std::vector<DensityMatrix> epsilon;
  std::vector<DensityMatrix> eta_j;
  std::vector<bool> w_degenerate(n_w, false);
  for (int w = 0; w < n_w; ++w) {
    if (p_f.is_zero(w)) {
      w_degenerate[w] = true;
      epsilon.push_back(DensityMatrix::maximally_mixed(e.dim()));
      eta_j.push_back(DensityMatrix::maximally_mixed(e.dim()));
      continue;
    }
    Matrix eps(e.dim()), etaw(e.dim());
    for (int a = 0; a < e.size(); ++a) {
      const double scale = e.prior().weight(a) / p_f.weight(w);
      if (scale <= 0.0) continue;
      const double cond = trace_product(povm.element(w), e.state(a).mat()).real();
      eps += (scale * std::max(cond, 0.0)) * e.state(a).mat();
      etaw += scale * (letter_roots[a] * povm.element(w) * letter_roots[a]);
    }
    epsilon.push_back(DensityMatrix(eps));
    eta_j.push_back(DensityMatrix(etaw));
  }

  return HallPackage{std::move(instrument_j), std::move(povm_j),      e.prior().labels(),
                     povm.outcomes(),         p_f,                    std::move(sigma),
                     std::move(sigma_degenerate), std::move(xi),      std::move(epsilon),
                     w_degenerate,            std::move(eta_j),       w_degenerate};
}

JointDistribution hall_joint(const Ensemble& e, const POVM& povm, const HallPackage& pkg) {
  const int n_w = povm.n_outcomes();
  const int n_a = e.size();
  std::vector<double> table(static_cast<size_t>(n_w) * n_a);
  for (int w = 0; w < n_w; ++w)
    for (int a = 0; a < n_a; ++a) {
      const double p = pkg.sigma_degenerate[w]
                           ? 0.0
                           : pkg.p_f.weight(w) *
                                 trace_product(pkg.povm_j.element(a), pkg.sigma[w].mat()).real();
      const double original =
          e.prior().weight(a) * trace_product(povm.element(w), e.state(a).mat()).real();
      if (std::abs(p - original) > 1e-10)
        throw CheckFailure("dual joint distribution does not transpose the original one");
      table[static_cast<size_t>(w) * n_a + a] = p;
    }
  return JointDistribution(pkg.outcomes, pkg.letters, std::move(table));
}

}  // namespace entrobounds
