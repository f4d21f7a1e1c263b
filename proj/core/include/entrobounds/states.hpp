#pragma once

#include <string>
#include <vector>

#include "entrobounds/matrix.hpp"

namespace entrobounds {

// Probability vector over ordered string labels. Labels are sorted at
// construction and every container in this library iterates in label order,
// which keeps repeated runs byte-identical.
class ProbVector {
 public:
  ProbVector(std::vector<std::string> labels, std::vector<double> weights);
  static ProbVector uniform(std::vector<std::string> labels);
  static ProbVector point_mass(std::vector<std::string> labels, const std::string& at);

  int size() const { return static_cast<int>(weights_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  double weight(int i) const { return weights_[i]; }
  const std::vector<double>& weights() const { return weights_; }
  // Throws UnknownOutcome when the label is absent.
  int index_of(const std::string& label) const;
  bool is_zero(int i) const { return weights_[i] <= kZeroProb; }

 private:
  std::vector<std::string> labels_;
  std::vector<double> weights_;
};

// Unit-trace positive matrix. Construction validates hermiticity, positivity
// (with the clipping rule) and the trace.
class DensityMatrix {
 public:
  explicit DensityMatrix(const Matrix& m);
  static DensityMatrix pure(std::vector<cd> psi);  // normalizes psi
  static DensityMatrix maximally_mixed(int dim);

  const Matrix& mat() const { return m_; }
  int dim() const { return m_.dim(); }

 private:
  Matrix m_;
};

// Finite labeled family of states with a prior: the input alphabet of a
// transmission problem. States are co-sorted with the prior labels.
class Ensemble {
 public:
  Ensemble(std::vector<std::string> labels, std::vector<double> prior,
           std::vector<DensityMatrix> states);

  int size() const { return prior_.size(); }
  int dim() const { return states_.front().dim(); }
  const ProbVector& prior() const { return prior_; }
  const DensityMatrix& state(int i) const { return states_[i]; }
  const std::vector<DensityMatrix>& states() const { return states_; }

 private:
  ProbVector prior_;
  std::vector<DensityMatrix> states_;
};

// Barycenter sum_a p(a) rho(a) of the ensemble.
DensityMatrix average_state(const Ensemble& e);

// Hybrid classical/quantum state: a positive-matrix-valued function on a
// finite outcome set with unit total trace. Block traces are the outcome
// probabilities; normalized blocks are the conditional states.
class HybridState {
 public:
  HybridState(std::vector<std::string> labels, std::vector<Matrix> blocks);
  static HybridState product(const ProbVector& p, const DensityMatrix& rho);

  int size() const { return static_cast<int>(blocks_.size()); }
  int dim() const { return blocks_.front().dim(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  const Matrix& block(int i) const { return blocks_[i]; }
  int index_of(const std::string& label) const;

 private:
  std::vector<std::string> labels_;
  std::vector<Matrix> blocks_;
};

struct HybridDecomposition {
  ProbVector probs;
  std::vector<DensityMatrix> states;
  // True where the block probability vanished and the state was completed
  // with the maximally mixed one. Flagged states never carry weight.
  std::vector<bool> degenerate;
};

HybridDecomposition hybrid_decompose(const HybridState& s);

// Joint distribution over (row label, column label) pairs; rows index the
// input alphabet, columns the measurement outcomes.
class JointDistribution {
 public:
  JointDistribution(std::vector<std::string> rows, std::vector<std::string> cols,
                    std::vector<double> table);  // row-major

  int n_rows() const { return static_cast<int>(rows_.size()); }
  int n_cols() const { return static_cast<int>(cols_.size()); }
  const std::vector<std::string>& rows() const { return rows_; }
  const std::vector<std::string>& cols() const { return cols_; }
  double at(int r, int c) const { return t_[static_cast<size_t>(r) * cols_.size() + c]; }

 private:
  std::vector<std::string> rows_, cols_;
  std::vector<double> t_;
};

struct JointMarginals {
  ProbVector row;  // p(a)
  ProbVector col;  // p(w)
  // col_given_row[r] is p(. | row r); uniform completion where the
  // conditioning probability vanishes, with the matching flag set.
  std::vector<ProbVector> col_given_row;
  std::vector<ProbVector> row_given_col;
  std::vector<bool> row_degenerate;
  std::vector<bool> col_degenerate;
};

JointMarginals joint_marginals(const JointDistribution& j);

// State of the (input, output quantum system, outcome) triple at the end of a
// transmission: block(a, w) = p(a) O(w)[rho(a)]. Stored unnormalized so no
// division by possibly vanishing probabilities ever happens here.
struct TripartiteState {
  std::vector<std::string> alphabet;
  std::vector<std::string> outcomes;
  std::vector<Matrix> blocks;  // row-major over (alphabet, outcomes)

  const Matrix& block(int a, int w) const {
    return blocks[static_cast<size_t>(a) * outcomes.size() + w];
  }
};

}  // namespace entrobounds
