#include "entrobounds/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "entrobounds/errors.hpp"

namespace entrobounds {

Matrix::Matrix(int dim, std::vector<cd> entries) : dim_(dim), a_(std::move(entries)) {
  if (dim_ < 1 || a_.size() != static_cast<size_t>(dim_) * dim_)
    throw DimensionMismatch("matrix entries do not form a " + std::to_string(dim_) + "x" +
                            std::to_string(dim_) + " block");
  if (!all_finite()) throw DomainError("matrix has non-finite entries");
}

Matrix Matrix::identity(int dim) {
  Matrix m(dim);
  for (int j = 0; j < dim; ++j) m(j, j) = 1.0;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<cd>>& rows) {
  const int n = static_cast<int>(rows.size());
  Matrix m(n);
  for (int r = 0; r < n; ++r) {
    if (rows[r].size() != static_cast<size_t>(n))
      throw DimensionMismatch("row " + std::to_string(r) + " has wrong length");
    for (int c = 0; c < n; ++c) m(r, c) = rows[r][c];
  }
  if (!m.all_finite()) throw DomainError("matrix has non-finite entries");
  return m;
}

Matrix Matrix::outer(const std::vector<cd>& u, const std::vector<cd>& v) {
  if (u.size() != v.size() || u.empty()) throw DimensionMismatch("outer product of mismatched vectors");
  const int n = static_cast<int>(u.size());
  Matrix m(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = u[r] * std::conj(v[c]);
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix m(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) m(r, c) = std::conj((*this)(c, r));
  return m;
}

cd Matrix::trace() const {
  cd t = 0.0;
  for (int j = 0; j < dim_; ++j) t += (*this)(j, j);
  return t;
}

double Matrix::frobenius_norm() const {
  double s = 0.0;
  for (const cd& z : a_) s += std::norm(z);
  return std::sqrt(s);
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (const cd& z : a_) m = std::max(m, std::abs(z));
  return m;
}

double Matrix::hermiticity_defect() const {
  double m = 0.0;
  for (int r = 0; r < dim_; ++r)
    for (int c = r; c < dim_; ++c)
      m = std::max(m, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  return m;
}

bool Matrix::is_hermitian(double tol) const {
  return hermiticity_defect() <= tol * (1.0 + max_abs());
}

bool Matrix::all_finite() const {
  for (const cd& z : a_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (dim_ != o.dim_) throw DimensionMismatch("matrix sum of different dimensions");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (dim_ != o.dim_) throw DimensionMismatch("matrix difference of different dimensions");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

Matrix& Matrix::operator*=(cd z) {
  for (cd& e : a_) e *= z;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.dim_ != b.dim_) throw DimensionMismatch("matrix product of different dimensions");
  const int n = a.dim_;
  Matrix m(n);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) {
      const cd ark = a(r, k);
      if (ark == cd(0.0, 0.0)) continue;
      for (int c = 0; c < n; ++c) m(r, c) += ark * b(k, c);
    }
  return m;
}

cd trace_product(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("trace_product of different dimensions");
  cd t = 0.0;
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) t += a(r, c) * b(c, r);
  return t;
}

cd expectation(const Matrix& m, const std::vector<cd>& v) {
  if (v.size() != static_cast<size_t>(m.dim())) throw DimensionMismatch("expectation vector length");
  cd t = 0.0;
  for (int r = 0; r < m.dim(); ++r) {
    cd row = 0.0;
    for (int c = 0; c < m.dim(); ++c) row += m(r, c) * v[c];
    t += std::conj(v[r]) * row;
  }
  return t;
}

namespace {

// One two-sided Jacobi rotation zeroing h(p,q). h is Hermitian throughout;
// v accumulates the eigenvector basis.
void jacobi_rotate(Matrix& h, Matrix& v, int p, int q) {
  const cd hpq = h(p, q);
  const double beta = std::abs(hpq);
  if (beta == 0.0) return;
  const cd u = hpq / beta;  // phase of the pivot
  const double alpha = h(p, p).real();
  const double gamma = h(q, q).real();
  const double tau = (gamma - alpha) / (2.0 * beta);
  const double sgn = (tau >= 0.0) ? 1.0 : -1.0;
  const double t = -sgn / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const int n = h.dim();
  for (int r = 0; r < n; ++r) {
    if (r == p || r == q) continue;
    const cd hrp = h(r, p), hrq = h(r, q);
    h(r, p) = c * hrp + s * std::conj(u) * hrq;
    h(r, q) = -s * u * hrp + c * hrq;
    h(p, r) = std::conj(h(r, p));
    h(q, r) = std::conj(h(r, q));
  }
  h(p, p) = alpha * c * c + 2.0 * beta * s * c + gamma * s * s;
  h(q, q) = alpha * s * s - 2.0 * beta * s * c + gamma * c * c;
  h(p, q) = 0.0;
  h(q, p) = 0.0;
  for (int r = 0; r < n; ++r) {
    const cd vrp = v(r, p), vrq = v(r, q);
    v(r, p) = c * vrp + s * std::conj(u) * vrq;
    v(r, q) = -s * u * vrp + c * vrq;
  }
}

}  // namespace

Spectrum eigh(const Matrix& a) {
  const double scale = a.max_abs();
  if (a.hermiticity_defect() > kHermTol * (1.0 + scale))
    throw NonHermitianInput("eigh input is not Hermitian within tolerance");

  const int n = a.dim();
  // Work on the Hermitian average so roundoff in the input cannot leak into
  // the rotations.
  Matrix h(n);
  for (int r = 0; r < n; ++r) {
    h(r, r) = a(r, r).real();
    for (int c = r + 1; c < n; ++c) {
      const cd e = 0.5 * (a(r, c) + std::conj(a(c, r)));
      h(r, c) = e;
      h(c, r) = std::conj(e);
    }
  }
  Matrix v = Matrix::identity(n);

  const double threshold = 1e-13 * std::max(1.0, scale);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(h(p, q)));
    if (off <= threshold) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q)
        if (std::abs(h(p, q)) > threshold) jacobi_rotate(h, v, p, q);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return h(i, i).real() < h(j, j).real(); });

  Spectrum s;
  s.eigenvalues.resize(n);
  s.eigenvectors = Matrix(n);
  for (int k = 0; k < n; ++k) {
    s.eigenvalues[k] = h(order[k], order[k]).real();
    for (int r = 0; r < n; ++r) s.eigenvectors(r, k) = v(r, order[k]);
  }
  return s;
}

namespace {

Matrix rebuild(const Spectrum& s, const std::vector<double>& diag) {
  const int n = s.eigenvectors.dim();
  Matrix m(n);
  for (int k = 0; k < n; ++k) {
    if (diag[k] == 0.0) continue;
    for (int r = 0; r < n; ++r) {
      const cd vr = s.eigenvectors(r, k) * diag[k];
      for (int c = 0; c < n; ++c) m(r, c) += vr * std::conj(s.eigenvectors(c, k));
    }
  }
  return m;
}

}  // namespace

Matrix spectral_apply(const Matrix& a, const std::function<double(double)>& f) {
  const Spectrum s = eigh(a);
  std::vector<double> d(s.eigenvalues.size());
  for (size_t k = 0; k < d.size(); ++k) {
    d[k] = f(s.eigenvalues[k]);
    if (!std::isfinite(d[k]))
      throw DomainError("spectral_apply: function not finite at eigenvalue " +
                        std::to_string(s.eigenvalues[k]));
  }
  return rebuild(s, d);
}

std::vector<double> psd_eigenvalues(const Matrix& a) {
  std::vector<double> eigs = eigh(a).eigenvalues;
  for (double& l : eigs) {
    if (l < 0.0) {
      if (l < -kPsdClipTol)
        throw NotPSD("matrix has eigenvalue " + std::to_string(l) + " below -" +
                     std::to_string(kPsdClipTol));
      l = 0.0;
    }
  }
  return eigs;
}

Matrix sqrt_psd(const Matrix& a) {
  const Spectrum s = eigh(a);
  std::vector<double> d(s.eigenvalues.size());
  for (size_t k = 0; k < d.size(); ++k) {
    double l = s.eigenvalues[k];
    if (l < 0.0) {
      if (l < -kPsdClipTol) throw NotPSD("sqrt_psd of a matrix with a negative eigenvalue");
      l = 0.0;
    }
    d[k] = std::sqrt(l);
  }
  return rebuild(s, d);
}

Matrix inv_sqrt_psd(const Matrix& a) {
  const Spectrum s = eigh(a);
  std::vector<double> d(s.eigenvalues.size());
  for (size_t k = 0; k < d.size(); ++k) {
    const double l = s.eigenvalues[k];
    if (l <= kInvertTol)
      throw NotInvertible("inv_sqrt_psd: eigenvalue " + std::to_string(l) +
                          " at or below the invertibility threshold");
    d[k] = 1.0 / std::sqrt(l);
  }
  return rebuild(s, d);
}

cd det(const Matrix& a) {
  const int n = a.dim();
  Matrix lu = a;
  cd d = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    double best = std::abs(lu(col, col));
    for (int r = col + 1; r < n; ++r) {
      const double cand = std::abs(lu(r, col));
      if (cand > best) {
        best = cand;
        pivot = r;
      }
    }
    if (best == 0.0) return 0.0;
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(lu(pivot, c), lu(col, c));
      d = -d;
    }
    d *= lu(col, col);
    for (int r = col + 1; r < n; ++r) {
      const cd factor = lu(r, col) / lu(col, col);
      for (int c = col; c < n; ++c) lu(r, c) -= factor * lu(col, c);
    }
  }
  return d;
}

}  // namespace entrobounds
