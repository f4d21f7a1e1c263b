#include "entrobounds/entropy.hpp"

#include <cmath>
#include <limits>

#include "entrobounds/errors.hpp"

namespace entrobounds {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Total probability mass tolerated outside the reference support before a
// relative entropy is declared infinite. Containment that holds exactly in
// arithmetic shows up numerically as mass around 1e-14, far below this.
constexpr double kOutsideMassTol = 1e-9;

double clamp_nonneg(double x) { return (x < 0.0 && x >= -1e-12) ? 0.0 : x; }

double plogp(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

// sum_k mu_k log2 mu_k over the (clipped) spectrum.
double trace_log(const Matrix& m) {
  double s = 0.0;
  for (double l : psd_eigenvalues(m)) s += plogp(l);
  return s;
}

// Core of the quantum relative entropy. With infinite_outside = false the
// mass outside the support of m2 is discarded instead, which evaluates the
// entropy on the common support projection; callers use that form where
// containment is guaranteed in exact arithmetic.
double rel_entropy_core(const Matrix& m1, const Matrix& m2, bool infinite_outside) {
  if (m1.dim() != m2.dim()) throw DimensionMismatch("relative entropy of different dimensions");
  const Spectrum s2 = eigh(m2);
  double cross = 0.0, outside = 0.0;
  for (int j = 0; j < m2.dim(); ++j) {
    std::vector<cd> v(m2.dim());
    for (int r = 0; r < m2.dim(); ++r) v[r] = s2.eigenvectors(r, j);
    const double w = std::max(0.0, expectation(m1, v).real());
    if (s2.eigenvalues[j] > kSupportTol)
      cross += w * std::log2(s2.eigenvalues[j]);
    else
      outside += w;
  }
  if (infinite_outside && outside > kOutsideMassTol) return kInf;
  return clamp_nonneg(trace_log(m1) - cross);
}

}  // namespace

double vn_entropy(const DensityMatrix& rho) { return clamp_nonneg(-trace_log(rho.mat())); }

double q_rel_entropy(const DensityMatrix& rho1, const DensityMatrix& rho2) {
  return rel_entropy_core(rho1.mat(), rho2.mat(), true);
}

double shannon(const ProbVector& p) {
  double s = 0.0;
  for (int i = 0; i < p.size(); ++i) s -= plogp(p.weight(i));
  return clamp_nonneg(s);
}

double kl(const ProbVector& p1, const ProbVector& p2) {
  if (p1.labels() != p2.labels()) throw LabelMismatch("KL divergence over different label sets");
  double s = 0.0;
  for (int i = 0; i < p1.size(); ++i) {
    if (p1.is_zero(i)) continue;
    if (p2.is_zero(i)) return kInf;
    s += p1.weight(i) * std::log2(p1.weight(i) / p2.weight(i));
  }
  return clamp_nonneg(s);
}

double hybrid_entropy(const HybridState& s) {
  const HybridDecomposition d = hybrid_decompose(s);
  double h = shannon(d.probs);
  for (int i = 0; i < d.probs.size(); ++i) {
    if (d.probs.is_zero(i)) continue;
    h += d.probs.weight(i) * vn_entropy(d.states[i]);
  }
  return h;
}

double rel_entropy_blocks(const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
  if (a.size() != b.size()) throw LabelMismatch("block families of different sizes");
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    const double t1 = a[i].trace().real();
    if (t1 <= kZeroProb) continue;
    const double t2 = b[i].trace().real();
    if (t2 <= kZeroProb) return kInf;
    const double term = rel_entropy_core((1.0 / t1) * a[i], (1.0 / t2) * b[i], true);
    if (term == kInf) return kInf;
    s += t1 * (std::log2(t1 / t2) + term);
  }
  return clamp_nonneg(s);
}

double hybrid_rel_entropy(const HybridState& s1, const HybridState& s2) {
  if (s1.labels() != s2.labels())
    throw LabelMismatch("hybrid relative entropy over different label sets");
  std::vector<Matrix> a, b;
  a.reserve(s1.size());
  b.reserve(s2.size());
  for (int i = 0; i < s1.size(); ++i) {
    a.push_back(s1.block(i));
    b.push_back(s2.block(i));
  }
  return rel_entropy_blocks(a, b);
}

double mutual_info_classical(const JointDistribution& j) {
  const JointMarginals m = joint_marginals(j);
  const ProbVector& pr = m.row;
  const ProbVector& pc = m.col;
  double s = 0.0;
  for (int r = 0; r < j.n_rows(); ++r)
    for (int c = 0; c < j.n_cols(); ++c) {
      const double p = j.at(r, c);
      if (p <= kZeroProb) continue;
      s += p * std::log2(p / (pr.weight(r) * pc.weight(c)));
    }
  return clamp_nonneg(s);
}

double chi_quantity(const Ensemble& e) {
  const DensityMatrix avg = average_state(e);
  double gap = vn_entropy(avg);
  double relsum = 0.0;
  for (int i = 0; i < e.size(); ++i) {
    if (e.prior().is_zero(i)) continue;
    gap -= e.prior().weight(i) * vn_entropy(e.state(i));
    // Containment of each member in the average holds in exact arithmetic,
    // so the term is evaluated on the common support projection.
    relsum += e.prior().weight(i) * rel_entropy_core(e.state(i).mat(), avg.mat(), false);
  }
  gap = clamp_nonneg(gap);
  if (std::abs(gap - relsum) > 1e-10)
    throw CheckFailure("chi entropy-gap and relative-entropy forms disagree by " +
                       std::to_string(gap - relsum));
  return gap;
}

namespace {

// j-th derivative of g(x) = -x^d log2(x), valid for j <= d; the limit at
// x -> 0+ is 0 because a positive power of x survives.
double g_derivative(int j, double x, int d) {
  if (x <= 0.0) return 0.0;
  double p = 1.0, q = 0.0;
  for (int k = 0; k < j; ++k) {
    q = (d - k) * q + p;
    p = (d - k) * p;
  }
  return -(p * std::log(x) + q) * std::pow(x, d - j) / std::log(2.0);
}

// g[x[0], ..., x[k]] for a tight cluster of points, as a Taylor series around
// the cluster mean: sum_n g^(k+n)(m)/(k+n)! * h_n(deviations), with h_n the
// complete homogeneous symmetric polynomials. Exact on ties. Requires the
// cluster width to stay below mean/10; the tail then dies geometrically,
// where the plain difference quotient would cancel catastrophically.
double cluster_divided_difference(const double* x, int k, int d) {
  double m = 0.0;
  for (int i = 0; i <= k; ++i) m += x[i];
  m /= (k + 1);
  if (m <= 0.0) return 0.0;  // all-zero cluster: g vanishes to order d at 0
  double w = 0.0;
  for (int i = 0; i <= k; ++i) w = std::max(w, std::abs(x[i] - m));

  double k_fact = 1.0;
  for (int i = 2; i <= k; ++i) k_fact *= i;
  if (w == 0.0) return g_derivative(k, m, d) / k_fact;

  // h[n] = h_n(u) over the scaled deviations u_i = (x_i - m)/w, |u_i| <= 1
  constexpr int kTerms = 60;
  double h[kTerms + 1] = {1.0};
  for (int i = 0; i <= k; ++i) {
    const double u = (x[i] - m) / w;
    for (int n = 1; n <= kTerms; ++n) h[n] += u * h[n - 1];
  }

  double d_fact = 1.0;
  for (int i = 2; i <= d; ++i) d_fact *= i;
  // c = g^(k+n)(m) w^n / (k+n)!, advanced by exact ratios once the log
  // derivatives take over at order d+1 so nothing overflows on the way
  double sum = 0.0, c = 0.0, wn = 1.0, fact = k_fact;
  for (int n = 0; n <= kTerms; ++n) {
    const int j = k + n;
    if (n > 0) {
      wn *= w;
      fact *= j;
    }
    if (j <= d)
      c = g_derivative(j, m, d) * wn / fact;
    else if (j == d + 1)
      c = -d_fact / std::log(2.0) / m * wn / fact;
    else
      c *= -(j - 1 - d) * w / (m * j);
    sum += c * h[n];
  }
  return sum;
}

}  // namespace

double subentropy(const DensityMatrix& rho) {
  const int d = rho.dim();
  if (d == 1) return 0.0;
  std::vector<double> x = psd_eigenvalues(rho.mat());  // ascending

  // Divided-difference table of g over the spectrum; column j holds
  // g[x_i, ..., x_{i+j}]. Narrow spans (width below a tenth of their mean)
  // take the series form above; spans hugging zero keep the plain quotient,
  // which stays absolutely accurate there because g vanishes to order d at
  // the origin.
  std::vector<double> f(d);
  for (int i = 0; i < d; ++i) f[i] = g_derivative(0, x[i], d);
  for (int j = 1; j < d; ++j)
    for (int i = 0; i + j < d; ++i) {
      const double span = x[i + j] - x[i];
      double m = 0.0;
      for (int k = i; k <= i + j; ++k) m += x[k];
      m /= (j + 1);
      if (span <= 0.0 || m >= 10.0 * span)
        f[i] = cluster_divided_difference(&x[i], j, d);
      else
        f[i] = (f[i + 1] - f[i]) / span;
    }
  return clamp_nonneg(f[0]);
}

}  // namespace entrobounds
