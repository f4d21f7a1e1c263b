#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "entrobounds/bounds.hpp"
#include "entrobounds/errors.hpp"
#include "entrobounds/instrument.hpp"
#include "entrobounds/random.hpp"
#include "entrobounds/scenarios.hpp"

using namespace entrobounds;

namespace {
Instrument coin_flip_measurement() {
  // projective measurement in the computational basis of a qubit
  Matrix p0 = Matrix::outer({cd(1), cd(0)}, {cd(1), cd(0)});
  Matrix p1 = Matrix::outer({cd(0), cd(1)}, {cd(0), cd(1)});
  return Instrument({"0", "1"}, {Operation{{p0}}, Operation{{p1}}});
}
}  // namespace

TEST_CASE("instrument construction validates completeness") {
  CHECK_NOTHROW(coin_flip_measurement());
  // sum V^dag V != identity
  Matrix p0 = Matrix::outer({cd(1), cd(0)}, {cd(1), cd(0)});
  CHECK_THROWS_AS(Instrument({"0", "1"}, {Operation{{p0}}, Operation{{p0}}}),
                  NormalizationError);
  CHECK_THROWS_AS(Instrument({"0"}, {Operation{{p0}}}), NormalizationError);
  // identity channel as a single-outcome instrument is fine
  CHECK_NOTHROW(Instrument({"only"}, {Operation{{Matrix::identity(3)}}}));
}

TEST_CASE("povm extraction and element access") {
  Instrument m = two_level_example_a(1.0).instrument;
  POVM e = povm_of(m);
  CHECK(e.n_outcomes() == 2);
  const double q = std::exp(-1.0);
  CHECK(e.element(e.index_of("0"))(0, 0).real() == doctest::Approx(q).epsilon(1e-14));
  CHECK(e.element(e.index_of("0"))(1, 1).real() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(e.element(e.index_of("1"))(0, 0).real() == doctest::Approx(1 - q).epsilon(1e-14));
  CHECK_THROWS_AS(e.index_of("zz"), UnknownOutcome);
  // completeness of elements
  Matrix sum(2);
  for (int w = 0; w < e.n_outcomes(); ++w) sum += e.element(w);
  CHECK((sum - Matrix::identity(2)).max_abs() < 1e-12);
  // povm_element on the instrument agrees
  CHECK((m.povm_element(0) - e.element(0)).max_abs() < 1e-14);
}

TEST_CASE("povm constructor validates") {
  Matrix p0 = Matrix::outer({cd(1), cd(0)}, {cd(1), cd(0)});
  Matrix p1 = Matrix::outer({cd(0), cd(1)}, {cd(0), cd(1)});
  CHECK_NOTHROW(POVM({"0", "1"}, {p0, p1}));
  CHECK_THROWS_AS(POVM({"0", "1"}, {p0, p0}), NormalizationError);
  Matrix neg = p0 - 2.0 * p1;
  CHECK_THROWS_AS(POVM({"0", "1"}, {neg, Matrix::identity(2) - neg}), NotPSD);
}

TEST_CASE("outcome probabilities agree through both routes") {
  Rng rng(11);
  for (int t = 0; t < 10; ++t) {
    Instrument m = random_instrument(rng, 3, 3, 2);
    DensityMatrix rho = random_density(rng, 3);
    ProbVector via_ops = outcome_probs(m, rho);
    ProbVector via_povm = outcome_probs(povm_of(m), rho);
    for (int w = 0; w < via_ops.size(); ++w)
      CHECK(via_ops.weight(w) == doctest::Approx(via_povm.weight(w)).epsilon(1e-12));
    double total = 0;
    for (int w = 0; w < via_ops.size(); ++w) total += via_ops.weight(w);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("a posteriori states normalize and flag degeneracy") {
  Instrument m = two_level_example_a(1.0).instrument;
  // letter 0 (ground state) never triggers outcome 1: degenerate completion
  DensityMatrix ground = DensityMatrix::pure({cd(0), cd(1)});
  auto fam = a_posteriori_family(m, ground);
  const int w1 = povm_of(m).index_of("1");
  CHECK(fam[w1].degenerate);
  const int w0 = povm_of(m).index_of("0");
  CHECK_FALSE(fam[w0].degenerate);
  CHECK((fam[w0].state.mat() - ground.mat()).max_abs() < 1e-12);

  // a priori state is the probability-weighted average of the a posteriori family
  DensityMatrix rho = DensityMatrix::pure({cd(1), cd(1)});
  auto fam2 = a_posteriori_family(m, rho);
  ProbVector probs = outcome_probs(m, rho);
  Matrix avg(2);
  for (int w = 0; w < probs.size(); ++w) avg += probs.weight(w) * fam2[w].state.mat();
  CHECK((avg - a_priori(m, rho).mat()).max_abs() < 1e-12);
}

TEST_CASE("instrument channel splits into classical and quantum parts") {
  Instrument m = two_level_example_a(0.7).instrument;
  DensityMatrix rho = average_state(example_a_ensemble());
  HybridState out = channel_lambda_i(m, rho);
  // block traces are the outcome probabilities
  ProbVector probs = outcome_probs(m, rho);
  for (int w = 0; w < probs.size(); ++w)
    CHECK(out.block(w).trace().real() == doctest::Approx(probs.weight(w)).epsilon(1e-12));
  // marginals recover the outcome distribution and the a priori state
  ProbVector cp = classical_part(out);
  for (int w = 0; w < probs.size(); ++w)
    CHECK(cp.weight(w) == doctest::Approx(probs.weight(w)).epsilon(1e-12));
  DensityMatrix qp = quantum_part(out);
  CHECK((qp.mat() - a_priori(m, rho).mat()).max_abs() < 1e-12);
}

TEST_CASE("transpose channel fixes the reference state") {
  // measuring the reference and feeding the outcome distribution back through
  // the transpose channel returns the reference itself
  Instrument m = coin_flip_measurement();
  POVM e = povm_of(m);
  Matrix diag(2);
  diag(0, 0) = 0.3;
  diag(1, 1) = 0.7;
  DensityMatrix phi(diag);
  ProbVector p_phi = outcome_probs(e, phi);
  DensityMatrix back = transpose_channel(e, phi, p_phi);
  CHECK((back.mat() - phi.mat()).max_abs() < 1e-11);

  // zero reference probability on some outcome is rejected
  DensityMatrix pure0 = DensityMatrix::pure({cd(1), cd(0)});
  CHECK_THROWS_AS(transpose_channel(e, pure0, p_phi), ZeroReferenceProbability);
}

TEST_CASE("information gain is nonnegative for pure-preserving instruments") {
  Rng rng(17);
  for (int t = 0; t < 20; ++t) {
    Instrument m = random_instrument(rng, 2, 2, 1);  // single Kraus per outcome
    DensityMatrix rho = random_density(rng, 2);
    CHECK(iq_gain(m, rho) >= -1e-9);
  }
}
