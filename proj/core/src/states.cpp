#include "entrobounds/states.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <utility>

#include "entrobounds/errors.hpp"

namespace entrobounds {

namespace {

constexpr double kSumTol = 1e-12;

std::vector<int> label_order(const std::vector<std::string>& labels) {
  std::vector<int> order(labels.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return labels[i] < labels[j]; });
  for (size_t i = 1; i < order.size(); ++i)
    if (labels[order[i - 1]] == labels[order[i]])
      throw LabelMismatch("duplicate label \"" + labels[order[i]] + "\"");
  return order;
}

template <typename T>
std::vector<T> permuted(const std::vector<T>& v, const std::vector<int>& order) {
  std::vector<T> out;
  out.reserve(v.size());
  for (int i : order) out.push_back(v[i]);
  return out;
}

double checked_weight(double w, const char* what) {
  if (!std::isfinite(w)) throw DomainError(std::string(what) + " has a non-finite weight");
  if (w < 0.0) {
    if (w < -kSumTol)
      throw NormalizationError(std::string(what) + " has negative weight " + std::to_string(w));
    w = 0.0;
  }
  if (w <= kZeroProb) w = 0.0;
  return w;
}

}  // namespace

ProbVector::ProbVector(std::vector<std::string> labels, std::vector<double> weights) {
  if (labels.size() != weights.size() || labels.empty())
    throw LabelMismatch("probability vector needs one weight per label");
  const std::vector<int> order = label_order(labels);
  labels_ = permuted(labels, order);
  weights_ = permuted(weights, order);
  double sum = 0.0;
  for (double& w : weights_) {
    w = checked_weight(w, "probability vector");
    sum += w;
  }
  if (std::abs(sum - 1.0) > kSumTol * weights_.size() + kSumTol)
    throw NormalizationError("probability vector sums to " + std::to_string(sum));
}

ProbVector ProbVector::uniform(std::vector<std::string> labels) {
  const size_t n = labels.size();
  return ProbVector(std::move(labels), std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

ProbVector ProbVector::point_mass(std::vector<std::string> labels, const std::string& at) {
  std::vector<double> w(labels.size(), 0.0);
  bool found = false;
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == at) {
      w[i] = 1.0;
      found = true;
    }
  if (!found) throw UnknownOutcome("point mass at unknown label \"" + at + "\"");
  return ProbVector(std::move(labels), std::move(w));
}

int ProbVector::index_of(const std::string& label) const {
  const auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label)
    throw UnknownOutcome("unknown label \"" + label + "\"");
  return static_cast<int>(it - labels_.begin());
}

DensityMatrix::DensityMatrix(const Matrix& m) : m_(m) {
  if (m_.dim() < 1) throw DimensionMismatch("density matrix of dimension 0");
  if (!m_.is_hermitian()) throw NonHermitianInput("density matrix is not Hermitian");
  psd_eigenvalues(m_);  // throws NotPSD below the clipping tolerance
  if (std::abs(m_.trace().real() - 1.0) > 1e-11 || std::abs(m_.trace().imag()) > 1e-11)
    throw NormalizationError("density matrix trace is not 1");
}

DensityMatrix DensityMatrix::pure(std::vector<cd> psi) {
  double n2 = 0.0;
  for (const cd& z : psi) n2 += std::norm(z);
  if (n2 <= 0.0) throw NormalizationError("pure state from the zero vector");
  const double inv = 1.0 / std::sqrt(n2);
  for (cd& z : psi) z *= inv;
  return DensityMatrix(Matrix::outer(psi, psi));
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  return DensityMatrix((1.0 / dim) * Matrix::identity(dim));
}

namespace {

std::vector<DensityMatrix> align_states(const std::vector<std::string>& labels,
                                        const std::vector<DensityMatrix>& states) {
  if (states.size() != labels.size())
    throw LabelMismatch("ensemble needs one state per label");
  return permuted(states, label_order(labels));
}

}  // namespace

// prior_ sorts by label internally and align_states applies the same
// permutation, so the two stay aligned.
Ensemble::Ensemble(std::vector<std::string> labels, std::vector<double> prior,
                   std::vector<DensityMatrix> states)
    : prior_(labels, std::move(prior)), states_(align_states(labels, states)) {
  for (const DensityMatrix& s : states_)
    if (s.dim() != states_.front().dim())
      throw DimensionMismatch("ensemble states of mixed dimensions");
}

DensityMatrix average_state(const Ensemble& e) {
  Matrix m(e.dim());
  for (int i = 0; i < e.size(); ++i) m += e.prior().weight(i) * e.state(i).mat();
  return DensityMatrix(m);
}

HybridState::HybridState(std::vector<std::string> labels, std::vector<Matrix> blocks) {
  if (labels.size() != blocks.size() || labels.empty())
    throw LabelMismatch("hybrid state needs one block per label");
  const std::vector<int> order = label_order(labels);
  labels_ = permuted(labels, order);
  blocks_ = permuted(blocks, order);
  double total = 0.0;
  for (const Matrix& b : blocks_) {
    if (b.dim() != blocks_.front().dim())
      throw DimensionMismatch("hybrid state blocks of mixed dimensions");
    if (!b.is_hermitian()) throw NonHermitianInput("hybrid state block is not Hermitian");
    psd_eigenvalues(b);
    total += b.trace().real();
  }
  if (std::abs(total - 1.0) > 1e-11)
    throw NormalizationError("hybrid state total trace is " + std::to_string(total));
}

HybridState HybridState::product(const ProbVector& p, const DensityMatrix& rho) {
  std::vector<Matrix> blocks;
  blocks.reserve(p.size());
  for (int i = 0; i < p.size(); ++i) blocks.push_back(p.weight(i) * rho.mat());
  return HybridState(p.labels(), std::move(blocks));
}

int HybridState::index_of(const std::string& label) const {
  const auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label)
    throw UnknownOutcome("unknown hybrid label \"" + label + "\"");
  return static_cast<int>(it - labels_.begin());
}

HybridDecomposition hybrid_decompose(const HybridState& s) {
  std::vector<double> probs(s.size());
  std::vector<DensityMatrix> states;
  std::vector<bool> degenerate(s.size(), false);
  states.reserve(s.size());
  for (int i = 0; i < s.size(); ++i) {
    probs[i] = checked_weight(s.block(i).trace().real(), "hybrid block");
    if (probs[i] == 0.0) {
      degenerate[i] = true;
      states.push_back(DensityMatrix::maximally_mixed(s.dim()));
    } else {
      states.push_back(DensityMatrix((1.0 / probs[i]) * s.block(i)));
    }
  }
  return HybridDecomposition{ProbVector(s.labels(), std::move(probs)), std::move(states),
                             std::move(degenerate)};
}

JointDistribution::JointDistribution(std::vector<std::string> rows, std::vector<std::string> cols,
                                     std::vector<double> table) {
  if (rows.empty() || cols.empty() || table.size() != rows.size() * cols.size())
    throw LabelMismatch("joint distribution table does not match its label sets");
  const std::vector<int> rorder = label_order(rows);
  const std::vector<int> corder = label_order(cols);
  rows_ = permuted(rows, rorder);
  cols_ = permuted(cols, corder);
  t_.resize(table.size());
  double sum = 0.0;
  for (size_t r = 0; r < rows_.size(); ++r)
    for (size_t c = 0; c < cols_.size(); ++c) {
      double w = checked_weight(table[rorder[r] * cols.size() + corder[c]], "joint distribution");
      t_[r * cols_.size() + c] = w;
      sum += w;
    }
  if (std::abs(sum - 1.0) > kSumTol * static_cast<double>(t_.size()) + kSumTol)
    throw NormalizationError("joint distribution sums to " + std::to_string(sum));
}

JointMarginals joint_marginals(const JointDistribution& j) {
  const int nr = j.n_rows(), nc = j.n_cols();
  std::vector<double> pr(nr, 0.0), pc(nc, 0.0);
  for (int r = 0; r < nr; ++r)
    for (int c = 0; c < nc; ++c) {
      pr[r] += j.at(r, c);
      pc[c] += j.at(r, c);
    }

  JointMarginals m{ProbVector(j.rows(), pr), ProbVector(j.cols(), pc), {}, {},
                   std::vector<bool>(nr, false), std::vector<bool>(nc, false)};
  for (int r = 0; r < nr; ++r) {
    if (pr[r] <= kZeroProb) {
      m.row_degenerate[r] = true;
      m.col_given_row.push_back(ProbVector::uniform(j.cols()));
    } else {
      std::vector<double> w(nc);
      for (int c = 0; c < nc; ++c) w[c] = j.at(r, c) / pr[r];
      m.col_given_row.push_back(ProbVector(j.cols(), std::move(w)));
    }
  }
  for (int c = 0; c < nc; ++c) {
    if (pc[c] <= kZeroProb) {
      m.col_degenerate[c] = true;
      m.row_given_col.push_back(ProbVector::uniform(j.rows()));
    } else {
      std::vector<double> w(nr);
      for (int r = 0; r < nr; ++r) w[r] = j.at(r, c) / pc[c];
      m.row_given_col.push_back(ProbVector(j.rows(), std::move(w)));
    }
  }
  return m;
}

}  // namespace entrobounds
