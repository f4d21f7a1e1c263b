#pragma once

#include <string>
#include <vector>

#include "entrobounds/states.hpp"

namespace entrobounds {

// Completely positive map given by a finite Kraus family.
struct Operation {
  std::vector<Matrix> kraus;
};

// sum_k V rho V*
Matrix apply_operation(const Operation& op, const Matrix& rho);

// Measurement with state change: one operation per outcome, trace preserving
// over the whole outcome set. Outcomes are sorted at construction.
class Instrument {
 public:
  Instrument(std::vector<std::string> outcomes, std::vector<Operation> ops);

  int n_outcomes() const { return static_cast<int>(ops_.size()); }
  int dim() const { return ops_.front().kraus.front().dim(); }
  const std::vector<std::string>& outcomes() const { return outcomes_; }
  const std::string& outcome(int w) const { return outcomes_[w]; }
  const Operation& op(int w) const { return ops_[w]; }
  int index_of(const std::string& outcome) const;
  // sum_k V*_k V_k of the outcome's Kraus family
  Matrix povm_element(int w) const;

 private:
  std::vector<std::string> outcomes_;
  std::vector<Operation> ops_;
};

// Measurement without state change: positive elements resolving the identity.
class POVM {
 public:
  POVM(std::vector<std::string> outcomes, std::vector<Matrix> elements);

  int n_outcomes() const { return static_cast<int>(elems_.size()); }
  int dim() const { return elems_.front().dim(); }
  const std::vector<std::string>& outcomes() const { return outcomes_; }
  const std::string& outcome(int w) const { return outcomes_[w]; }
  const Matrix& element(int w) const { return elems_[w]; }
  int index_of(const std::string& outcome) const;

 private:
  std::vector<std::string> outcomes_;
  std::vector<Matrix> elems_;
};

POVM povm_of(const Instrument& m);

ProbVector outcome_probs(const POVM& e, const DensityMatrix& rho);
// Same distribution through both routes (POVM traces and operation traces);
// they are checked against each other to 1e-10.
ProbVector outcome_probs(const Instrument& m, const DensityMatrix& rho);

struct ConditionalState {
  DensityMatrix state;
  // Set when the outcome probability vanished; the state is then the
  // maximally mixed completion and must not be given weight downstream.
  bool degenerate;
};

// O(w)[rho] / p(w), the state after observing outcome w.
ConditionalState a_posteriori(const Instrument& m, const DensityMatrix& rho, int w);
ConditionalState a_posteriori(const Instrument& m, const DensityMatrix& rho,
                              const std::string& outcome);
std::vector<ConditionalState> a_posteriori_family(const Instrument& m, const DensityMatrix& rho);

// Non-selective output state O(Omega)[rho].
DensityMatrix a_priori(const Instrument& m, const DensityMatrix& rho);

// The channel rho -> (w -> O(w)[rho]) into hybrid states. Composing with
// quantum_part recovers a_priori; classical_part gives the outcome
// distribution.
HybridState channel_lambda_i(const Instrument& m, const DensityMatrix& rho);
ProbVector classical_part(const HybridState& s);
DensityMatrix quantum_part(const HybridState& s);

// phi-transpose of the measurement channel applied to a distribution f over
// outcomes: sum_w (f(w)/p_phi(w)) phi^{1/2} E(w) phi^{1/2}. Throws
// ZeroReferenceProbability when some reference probability p_phi(w) vanishes.
DensityMatrix transpose_channel(const POVM& e, const DensityMatrix& phi, const ProbVector& f);

}  // namespace entrobounds
