#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "entrobounds/errors.hpp"
#include "entrobounds/matrix.hpp"
#include "entrobounds/random.hpp"

using namespace entrobounds;

namespace {
const cd I(0.0, 1.0);

Matrix random_hermitian(Rng& rng, int d) {
  Matrix g = ginibre(rng, d);
  Matrix h = g + g.adjoint();
  return 0.5 * h;
}
}  // namespace

TEST_CASE("construction validates shape and finiteness") {
  CHECK_THROWS_AS(Matrix(2, {cd(1), cd(0), cd(0)}), Error);
  CHECK_THROWS_AS(Matrix(1, {cd(std::nan(""), 0)}), Error);
  Matrix m = Matrix::from_rows({{cd(1), cd(2)}, {cd(3), cd(4)}});
  CHECK(m(1, 0) == cd(3));
  CHECK(Matrix::identity(3).trace() == cd(3));
}

TEST_CASE("outer product and expectation") {
  Matrix p = Matrix::outer({cd(1), cd(0)}, {cd(0), cd(1)});
  CHECK(p(0, 1) == cd(1));
  CHECK(p(0, 0) == cd(0));
  Matrix h = Matrix::from_rows({{cd(2), I}, {-I, cd(2)}});
  CHECK(expectation(h, {cd(1), cd(0)}).real() == doctest::Approx(2.0));
  CHECK(trace_product(h, h).real() == doctest::Approx(4 + 4 + 2));  // |2|^2*2 + |i|^2*2
}

TEST_CASE("eigh solves the analytic 2x2 cases") {
  Matrix a = Matrix::from_rows({{cd(2), cd(1)}, {cd(1), cd(2)}});
  Spectrum s = eigh(a);
  CHECK(s.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.eigenvalues[1] == doctest::Approx(3.0).epsilon(1e-12));

  Matrix b = Matrix::from_rows({{cd(1), I}, {-I, cd(1)}});
  Spectrum sb = eigh(b);
  CHECK(sb.eigenvalues[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(sb.eigenvalues[1] == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("eigh reconstructs random Hermitian matrices and is ordered") {
  Rng rng(2024);
  for (int d : {2, 3, 4, 5}) {
    Matrix a = random_hermitian(rng, d);
    Spectrum s = eigh(a);
    for (size_t k = 1; k < s.eigenvalues.size(); ++k)
      CHECK(s.eigenvalues[k] >= s.eigenvalues[k - 1]);
    // unitarity of the eigenvector matrix
    Matrix vtv = s.eigenvectors.adjoint() * s.eigenvectors;
    CHECK((vtv - Matrix::identity(d)).max_abs() < 1e-11);
    // reconstruction V diag V^*
    Matrix diag(d);
    for (int k = 0; k < d; ++k) diag(k, k) = s.eigenvalues[k];
    Matrix rec = s.eigenvectors * diag * s.eigenvectors.adjoint();
    CHECK((rec - a).max_abs() < 1e-11);
  }
}

TEST_CASE("eigh rejects non-Hermitian input") {
  Matrix a = Matrix::from_rows({{cd(1), cd(1)}, {cd(0), cd(1)}});
  CHECK_THROWS_AS(eigh(a), NonHermitianInput);
}

TEST_CASE("spectral functions") {
  Matrix a = Matrix::from_rows({{cd(2), cd(1)}, {cd(1), cd(2)}});
  Matrix r = sqrt_psd(a);
  CHECK((r * r - a).max_abs() < 1e-12);
  Matrix ir = inv_sqrt_psd(a);
  CHECK((ir * a * ir - Matrix::identity(2)).max_abs() < 1e-12);

  // spectral_apply rejects non-finite values of f on the spectrum
  Matrix sing = Matrix::outer({cd(1), cd(0)}, {cd(1), cd(0)});
  CHECK_THROWS_AS(spectral_apply(sing, [](double x) { return std::log(x); }), DomainError);
  CHECK_THROWS_AS(inv_sqrt_psd(sing), NotInvertible);
}

TEST_CASE("psd eigenvalue clipping rule") {
  Matrix tiny(2);
  tiny(0, 0) = -5e-11;  // within the clip band
  tiny(1, 1) = 1.0;
  auto ev = psd_eigenvalues(tiny);
  CHECK(ev.front() == 0.0);
  Matrix bad(2);
  bad(0, 0) = -1e-8;  // beyond the clip band
  bad(1, 1) = 1.0;
  CHECK_THROWS_AS(psd_eigenvalues(bad), NotPSD);
}

TEST_CASE("determinant") {
  Matrix a = Matrix::from_rows({{cd(1), cd(2)}, {cd(3), cd(4)}});
  CHECK(det(a).real() == doctest::Approx(-2.0).epsilon(1e-12));
  Matrix u = Matrix::from_rows({{cd(0), I}, {I, cd(0)}});
  CHECK(std::abs(det(u) - cd(1)) < 1e-12);  // det = -i*i = 1
}

TEST_CASE("rng streams are deterministic and decorrelated") {
  Rng a(7), b(7), c(8);
  for (int i = 0; i < 16; ++i) {
    const double va = a.uniform();
    CHECK(va == b.uniform());
    CHECK(va >= 0.0);
    CHECK(va < 1.0);
  }
  CHECK(a.uniform() != c.uniform());
  CHECK(mix_seed(1, 2) != mix_seed(2, 1));
  CHECK(mix_seed(1, 2) == mix_seed(1, 2));
}

TEST_CASE("ginibre and random density shapes") {
  Rng rng(99);
  Matrix g = ginibre(rng, 3);
  CHECK(g.dim() == 3);
  CHECK(g.all_finite());
  auto rho = random_density(rng, 3);
  CHECK(rho.mat().trace().real() == doctest::Approx(1.0).epsilon(1e-12));
  auto ev = psd_eigenvalues(rho.mat());
  CHECK(ev.front() >= 0.0);
}
