#include "cvw/kernel_spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cvw/error.hpp"

namespace cvw {

KernelSpec::KernelSpec(double alpha, double r) : alpha_(alpha), r_(r) {
  if (!(alpha > 0)) throw Error(ErrorCode::InvalidArgument, "kernel needs alpha > 0", alpha);
  if (!(std::abs(r) < 1)) throw Error(ErrorCode::InvalidArgument, "kernel needs |r| < 1", r);
  beta_ = alpha * std::sqrt(1 - r * r);
}

double KernelSpec::operator()(double x, double y) const {
  return std::exp(-alpha_ * (x * x + y * y) + 2 * alpha_ * r_ * x * y);
}

QuadratureGrid QuadratureGrid::gauss_legendre(int n, double lo, double hi) {
  if (n < 1 || !(hi > lo)) throw Error(ErrorCode::InvalidArgument, "invalid quadrature request");
  QuadratureGrid g;
  g.lo = lo;
  g.hi = hi;
  g.nodes.resize(n);
  g.weights.resize(n);
  const double mid = 0.5 * (hi + lo), half = 0.5 * (hi - lo);
  const unsigned un = static_cast<unsigned>(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Newton on P_n from the Chebyshev-like initial guess.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0;
    for (int it = 0; it < 100; ++it) {
      const double p = std::legendre(un, x), pm = std::legendre(un - 1, x);
      dp = n * (x * p - pm) / (x * x - 1);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double p = std::legendre(un, x), pm = std::legendre(un - 1, x);
    dp = n * (x * p - pm) / (x * x - 1);
    const double w = 2 / ((1 - x * x) * dp * dp);
    g.nodes[i] = mid - half * x;
    g.nodes[n - 1 - i] = mid + half * x;
    g.weights[i] = g.weights[n - 1 - i] = half * w;
  }
  return g;
}

QuadratureGrid default_grid(const KernelSpec& k, int nodes) {
  const double l = 8 / std::sqrt(k.beta());
  return QuadratureGrid::gauss_legendre(nodes, -l, l);
}

double analytic_eigenvalue(const KernelSpec& k, int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "eigenvalue index must be >= 0");
  const double s = k.alpha() + k.beta();
  return std::sqrt(std::numbers::pi / s) * std::pow(k.alpha() * k.r() / s, n);
}

double analytic_trace(const KernelSpec& k) {
  return std::sqrt(std::numbers::pi / (2 * k.alpha() * (1 - k.r())));
}

double eigenfunction(const KernelSpec& k, int n, double x) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "eigenfunction index must be >= 0");
  // Hermite functions psi_n(eta) = H_n(eta) e^{-eta^2/2} / sqrt(2^n n! sqrt(pi)),
  // advanced with the normalized form of H_{n+1} = 2 eta H_n - 2 n H_{n-1}.
  const double scale = std::sqrt(2 * k.beta());
  const double eta = scale * x;
  double prev = 0, cur = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * eta * eta);
  for (int j = 0; j < n; ++j) {
    const double next = std::sqrt(2.0 / (j + 1)) * eta * cur - std::sqrt(double(j) / (j + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return std::sqrt(scale) * cur;
}

namespace {

void require_wide_enough(const KernelSpec& k, const QuadratureGrid& grid) {
  const double l = std::min(-grid.lo, grid.hi);
  const double sb = std::sqrt(k.beta());
  if (l < 6 / sb) throw Error(ErrorCode::GridTooNarrow, "grid half-width below 6 / sqrt(beta)", l);
  // Slowest Gaussian decay among the kernel diagonal and the eigenfunction squares.
  const double decay = std::min(2 * k.alpha() * (1 - k.r()), 2 * k.beta());
  const double tail = std::erfc(l * std::sqrt(decay));
  if (tail > 1e-10) throw Error(ErrorCode::GridTooNarrow, "tail mass beyond the grid exceeds 1e-10", tail);
}

}  // namespace

Vector apply_kernel(const KernelSpec& k, const Vector& samples, const QuadratureGrid& grid) {
  if (samples.size() != grid.size())
    throw Error(ErrorCode::DimensionMismatch, "samples do not match the grid");
  require_wide_enough(k, grid);
  const int n = grid.size();
  Vector out(n);
  for (int i = 0; i < n; ++i) {
    double s = 0;
    for (int j = 0; j < n; ++j) s += grid.weights[j] * k(grid.nodes[i], grid.nodes[j]) * samples(j);
    out(i) = s;
  }
  return out;
}

std::vector<double> nystrom_spectrum(const KernelSpec& k, int grid_size) {
  if (grid_size < 64) throw Error(ErrorCode::InvalidArgument, "Nystrom grid needs at least 64 nodes");
  const QuadratureGrid grid = default_grid(k, grid_size);
  require_wide_enough(k, grid);
  Matrix a(grid_size, grid_size);
  for (int i = 0; i < grid_size; ++i)
    for (int j = 0; j < grid_size; ++j)
      a(i, j) = std::sqrt(grid.weights[i] * grid.weights[j]) * k(grid.nodes[i], grid.nodes[j]);
  Eigen::SelfAdjointEigenSolver<Matrix> es(a, Eigen::EigenvaluesOnly);
  std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + grid_size);
  std::stable_sort(ev.begin(), ev.end(), [](double x, double y) { return std::abs(x) > std::abs(y); });
  return ev;
}

double kernel_matrix_trace(const KernelSpec& k, const QuadratureGrid& grid) {
  double s = 0;
  for (int i = 0; i < grid.size(); ++i) s += grid.weights[i] * k(grid.nodes[i], grid.nodes[i]);
  return s;
}

}  // namespace cvw
