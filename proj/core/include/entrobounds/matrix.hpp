#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace entrobounds {

using cd = std::complex<double>;

// Shared tolerances of the numeric pipeline. All matrices here are tiny
// (d <= ~16) and trace-normalized, so absolute thresholds are meaningful.
inline constexpr double kHermTol = 1e-12;     // hermiticity defect, scaled by 1 + max|entry|
inline constexpr double kPsdClipTol = 1e-10;  // eigenvalues in [-kPsdClipTol, 0) clip to 0
inline constexpr double kInvertTol = 1e-10;   // smallest eigenvalue accepted as invertible
inline constexpr double kZeroProb = 1e-12;    // probabilities at or below this are exact zeros
inline constexpr double kSupportTol = 1e-12;  // eigenvalue threshold defining a support

// Dense complex square matrix, row-major. No attempt at performance heroics:
// everything downstream works on d x d blocks with d at most a few.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim) {}
  Matrix(int dim, std::vector<cd> entries);  // throws on size mismatch or non-finite entries

  static Matrix identity(int dim);
  static Matrix from_rows(const std::vector<std::vector<cd>>& rows);
  // |u><v|
  static Matrix outer(const std::vector<cd>& u, const std::vector<cd>& v);

  int dim() const { return dim_; }
  cd& operator()(int r, int c) { return a_[static_cast<size_t>(r) * dim_ + c]; }
  const cd& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * dim_ + c]; }

  Matrix adjoint() const;
  cd trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  // max_jk |a(j,k) - conj(a(k,j))|
  double hermiticity_defect() const;
  bool is_hermitian(double tol = kHermTol) const;
  bool all_finite() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(cd z);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(cd z, Matrix a) { return a *= z; }
  friend Matrix operator*(double x, Matrix a) { return a *= cd(x, 0.0); }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

 private:
  int dim_ = 0;
  std::vector<cd> a_;
};

// Tr{a b} without forming the product.
cd trace_product(const Matrix& a, const Matrix& b);
// <v| m |v>
cd expectation(const Matrix& m, const std::vector<cd>& v);

struct Spectrum {
  std::vector<double> eigenvalues;  // ascending
  Matrix eigenvectors;              // unitary; k-th column pairs with eigenvalues[k]
};

// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi rotations
// (off-diagonal threshold 1e-13 relative to the input scale, at most 100
// sweeps). Throws NonHermitianInput when the defect exceeds kHermTol.
Spectrum eigh(const Matrix& a);

// V f(diag) V* on the eigendecomposition of a. Throws DomainError when f
// returns a non-finite value at some eigenvalue.
Matrix spectral_apply(const Matrix& a, const std::function<double(double)>& f);

// Eigenvalues with the PSD clipping rule applied: values in [-kPsdClipTol, 0)
// become 0, anything below that raises NotPSD.
std::vector<double> psd_eigenvalues(const Matrix& a);

Matrix sqrt_psd(const Matrix& a);
// Throws NotInvertible unless every eigenvalue exceeds kInvertTol.
Matrix inv_sqrt_psd(const Matrix& a);

// Determinant by LU with partial pivoting (works for any complex square
// matrix, Hermitian or not).
cd det(const Matrix& a);

}  // namespace entrobounds
