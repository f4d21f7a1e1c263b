#include "entrobounds/instrument.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "entrobounds/errors.hpp"

namespace entrobounds {

namespace {

constexpr double kCompletenessTol = 1e-10;

std::vector<int> sorted_order(const std::vector<std::string>& labels) {
  std::vector<int> order(labels.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return labels[i] < labels[j]; });
  for (size_t i = 1; i < order.size(); ++i)
    if (labels[order[i - 1]] == labels[order[i]])
      throw LabelMismatch("duplicate outcome \"" + labels[order[i]] + "\"");
  return order;
}

int find_label(const std::vector<std::string>& labels, const std::string& l) {
  const auto it = std::lower_bound(labels.begin(), labels.end(), l);
  if (it == labels.end() || *it != l) throw UnknownOutcome("unknown outcome \"" + l + "\"");
  return static_cast<int>(it - labels.begin());
}

}  // namespace

Matrix apply_operation(const Operation& op, const Matrix& rho) {
  Matrix out(rho.dim());
  for (const Matrix& v : op.kraus) out += v * rho * v.adjoint();
  return out;
}

Instrument::Instrument(std::vector<std::string> outcomes, std::vector<Operation> ops) {
  if (outcomes.size() != ops.size() || outcomes.empty())
    throw LabelMismatch("instrument needs one operation per outcome");
  const std::vector<int> order = sorted_order(outcomes);
  for (int i : order) {
    outcomes_.push_back(outcomes[i]);
    ops_.push_back(std::move(ops[i]));
  }
  const int d = ops_.front().kraus.empty() ? 0 : ops_.front().kraus.front().dim();
  if (d == 0) throw DimensionMismatch("instrument outcome with empty Kraus family");
  Matrix total(d);
  for (const Operation& op : ops_) {
    if (op.kraus.empty()) throw DimensionMismatch("instrument outcome with empty Kraus family");
    for (const Matrix& v : op.kraus) {
      if (v.dim() != d) throw DimensionMismatch("Kraus operators of mixed dimensions");
      total += v.adjoint() * v;
    }
  }
  total -= Matrix::identity(d);
  if (total.max_abs() > kCompletenessTol)
    throw NormalizationError("instrument is not trace preserving (defect " +
                             std::to_string(total.max_abs()) + ")");
}

int Instrument::index_of(const std::string& outcome) const {
  return find_label(outcomes_, outcome);
}

Matrix Instrument::povm_element(int w) const {
  Matrix e(dim());
  for (const Matrix& v : ops_[w].kraus) e += v.adjoint() * v;
  return e;
}

POVM::POVM(std::vector<std::string> outcomes, std::vector<Matrix> elements) {
  if (outcomes.size() != elements.size() || outcomes.empty())
    throw LabelMismatch("POVM needs one element per outcome");
  const std::vector<int> order = sorted_order(outcomes);
  for (int i : order) {
    outcomes_.push_back(outcomes[i]);
    elems_.push_back(std::move(elements[i]));
  }
  const int d = elems_.front().dim();
  Matrix total(d);
  for (const Matrix& e : elems_) {
    if (e.dim() != d) throw DimensionMismatch("POVM elements of mixed dimensions");
    if (!e.is_hermitian()) throw NonHermitianInput("POVM element is not Hermitian");
    psd_eigenvalues(e);
    total += e;
  }
  total -= Matrix::identity(d);
  if (total.max_abs() > kCompletenessTol)
    throw NormalizationError("POVM does not resolve the identity (defect " +
                             std::to_string(total.max_abs()) + ")");
}

int POVM::index_of(const std::string& outcome) const { return find_label(outcomes_, outcome); }

POVM povm_of(const Instrument& m) {
  std::vector<Matrix> elems;
  elems.reserve(m.n_outcomes());
  for (int w = 0; w < m.n_outcomes(); ++w) elems.push_back(m.povm_element(w));
  return POVM(m.outcomes(), std::move(elems));
}

ProbVector outcome_probs(const POVM& e, const DensityMatrix& rho) {
  std::vector<double> p(e.n_outcomes());
  for (int w = 0; w < e.n_outcomes(); ++w)
    p[w] = trace_product(e.element(w), rho.mat()).real();
  return ProbVector(e.outcomes(), std::move(p));
}

ProbVector outcome_probs(const Instrument& m, const DensityMatrix& rho) {
  const ProbVector via_povm = outcome_probs(povm_of(m), rho);
  for (int w = 0; w < m.n_outcomes(); ++w) {
    const double via_op = apply_operation(m.op(w), rho.mat()).trace().real();
    if (std::abs(via_op - via_povm.weight(w)) > 1e-10)
      throw CheckFailure("outcome probabilities via POVM and via operations disagree");
  }
  return via_povm;
}

ConditionalState a_posteriori(const Instrument& m, const DensityMatrix& rho, int w) {
  const Matrix block = apply_operation(m.op(w), rho.mat());
  const double p = block.trace().real();
  if (p <= kZeroProb) return ConditionalState{DensityMatrix::maximally_mixed(m.dim()), true};
  return ConditionalState{DensityMatrix((1.0 / p) * block), false};
}

ConditionalState a_posteriori(const Instrument& m, const DensityMatrix& rho,
                              const std::string& outcome) {
  return a_posteriori(m, rho, m.index_of(outcome));
}

std::vector<ConditionalState> a_posteriori_family(const Instrument& m, const DensityMatrix& rho) {
  std::vector<ConditionalState> out;
  out.reserve(m.n_outcomes());
  for (int w = 0; w < m.n_outcomes(); ++w) out.push_back(a_posteriori(m, rho, w));
  return out;
}

DensityMatrix a_priori(const Instrument& m, const DensityMatrix& rho) {
  Matrix out(m.dim());
  for (int w = 0; w < m.n_outcomes(); ++w) out += apply_operation(m.op(w), rho.mat());
  return DensityMatrix(out);
}

HybridState channel_lambda_i(const Instrument& m, const DensityMatrix& rho) {
  std::vector<Matrix> blocks;
  blocks.reserve(m.n_outcomes());
  for (int w = 0; w < m.n_outcomes(); ++w) blocks.push_back(apply_operation(m.op(w), rho.mat()));
  return HybridState(m.outcomes(), std::move(blocks));
}

ProbVector classical_part(const HybridState& s) { return hybrid_decompose(s).probs; }

DensityMatrix quantum_part(const HybridState& s) {
  Matrix sum(s.dim());
  for (int i = 0; i < s.size(); ++i) sum += s.block(i);
  return DensityMatrix(sum);
}

DensityMatrix transpose_channel(const POVM& e, const DensityMatrix& phi, const ProbVector& f) {
  if (f.labels() != e.outcomes())
    throw LabelMismatch("transpose channel input over a different outcome set");
  const Matrix root = sqrt_psd(phi.mat());
  const ProbVector ref = outcome_probs(e, phi);
  Matrix out(e.dim());
  for (int w = 0; w < e.n_outcomes(); ++w) {
    if (ref.is_zero(w))
      throw ZeroReferenceProbability("reference state gives outcome \"" + e.outcome(w) +
                                     "\" zero probability");
    out += (f.weight(w) / ref.weight(w)) * (root * e.element(w) * root);
  }
  return DensityMatrix(out);
}

}  // namespace entrobounds
