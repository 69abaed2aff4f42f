#pragma once

#include <vector>

#include "cvw/linalg.hpp"

namespace cvw {

// kappa(x, y) = exp(-alpha (x^2 + y^2) + 2 alpha r x y), alpha > 0, |r| < 1.
class KernelSpec {
 public:
  KernelSpec(double alpha, double r);

  double alpha() const { return alpha_; }
  double r() const { return r_; }
  // Width of the eigenfunctions: alpha sqrt(1 - r^2).
  double beta() const { return beta_; }

  double operator()(double x, double y) const;

 private:
  double alpha_, r_, beta_;
};

struct QuadratureGrid {
  std::vector<double> nodes, weights;
  double lo = 0, hi = 0;

  static QuadratureGrid gauss_legendre(int n, double lo, double hi);
  int size() const { return static_cast<int>(nodes.size()); }
};

inline constexpr int kDefaultGridNodes = 256;

// Gauss-Legendre on [-L, L] with L = 8 / sqrt(beta).
QuadratureGrid default_grid(const KernelSpec& k, int nodes = kDefaultGridNodes);

// sqrt(pi / (alpha + beta)) (alpha r / (alpha + beta))^n
double analytic_eigenvalue(const KernelSpec& k, int n);

// Sum of all eigenvalues, which equals the integral of kappa(x, x):
// sqrt(pi / (2 alpha (1 - r))).
double analytic_trace(const KernelSpec& k);

// L2-normalized eigenfunction: a Hermite function of sqrt(2 beta) x.
double eigenfunction(const KernelSpec& k, int n, double x);

// Samples of (K f)(x_i) = sum_j w_j kappa(x_i, x_j) f(x_j). Throws GridTooNarrow
// when L < 6 / sqrt(beta) or the Gaussian tail beyond L exceeds 1e-10.
Vector apply_kernel(const KernelSpec& k, const Vector& samples, const QuadratureGrid& grid);

// Eigenvalues of W^{1/2} K W^{1/2} sorted by |value| descending; grid_size >= 64.
std::vector<double> nystrom_spectrum(const KernelSpec& k, int grid_size = kDefaultGridNodes);

// sum_i w_i kappa(x_i, x_i)
double kernel_matrix_trace(const KernelSpec& k, const QuadratureGrid& grid);

}  // namespace cvw
