#pragma once

#include <utility>
#include <vector>

#include "cvw/symplectic.hpp"

namespace cvw {

enum class PositivityRegime {
  Psd,       // gamma_M >= 0: the detect operator's vacuum-optimality regime
  Physical,  // gamma_M + i sigma >= 0: positivity of the detect operator itself
};

// Two-mode detect operator
//   [[M1, 0, M5, 0], [0, M2, 0, -M6], [M5, 0, M3, 0], [0, -M6, 0, M4]].
struct SixParamDetect {
  double m1 = 1, m2 = 1, m3 = 1, m4 = 1, m5 = 0, m6 = 0;

  Matrix to_matrix() const;
  // Exchanges the two modes.
  SixParamDetect swapped() const { return {m3, m4, m1, m2, m5, m6}; }
  bool satisfies(PositivityRegime regime) const;
  // Throws NotPositive (Psd) or NotPhysical (Physical).
  void require(PositivityRegime regime) const;
};

struct OmegaMembership {
  double residual_a = 0;  // |M1 M2 - M3 M4|
  double residual_b = 0;  // |(M1 M3 - M5^2)(M2 M4 - M6^2) - 1|
  bool member() const { return residual_a < 1e-9 && residual_b < 1e-9; }
};

OmegaMembership omega_residuals(const SixParamDetect& d);

struct TwoFoldKernelCM {
  Matrix zeta, omega;
  Matrix gamma_2m() const;
};

// gamma_M partitioned as [[g1, g3], [g3^T, g2]] with g1 covering the first
// `modes_a` modes. Throws SingularGamma2.
TwoFoldKernelCM two_fold_kernel(const Matrix& gamma_m, int modes_a);

struct FixedPoint {
  Matrix gamma_a, gamma_b;
  int iterations = 0;
};

// gamma_A = g1 - g3 (g2 + gamma_B)^{-1} g3^T, gamma_B = g2 - g3^T (g1 + gamma_A)^{-1} g3,
// started from gamma_B = I. Throws NoConvergence.
FixedPoint fixed_point_ab(const Matrix& gamma_m, int modes_a, double tol = 1e-12,
                          int max_iter = 10000);

// F(x, y) = det(gamma_M + diag(x, 1/x, y, 1/y)).
double presqueezed_det(const SixParamDetect& d, double x, double y);

// dF/dx and dF/dy written as the two stationarity conditions.
std::pair<double, double> stationarity_residuals(const SixParamDetect& d, double x, double y);

struct LambdaResult {
  double lambda = 0;  // 4 / sqrt(min F)
  double x = 1, y = 1;
  double min_det = 0;
};

// Requires gamma_M >= 0. Throws OptimFailure when the Newton refinement ends
// more than 1e-6 (relative) above the best grid value.
LambdaResult lambda_product_vacuum(const SixParamDetect& d);

// det(gamma + gamma_M) / min_{x,y} F; requires gamma_M + i sigma >= 0.
double l_ratio(const CovarianceMatrix& gamma, const SixParamDetect& d);

inline const std::vector<double> kDefaultLSchedule{1e2, 1e3, 1e4};

struct MinimizeLResult {
  double value = 0;               // min(schedule values, analytic limit)
  SixParamDetect detect;          // best finite detect operator found
  double limit = 0;               // M1 -> infinity value of the family
  std::vector<double> schedule;   // best value at each schedule entry
  bool from_limit = false;
};

// Minimizes the ratio over the family M2 = M1, M4 = M3, M6 = M5,
// M5^2 = (M1 + 1)(M3 - 1), in both mode orientations, restricted to its
// physical range M3 <= M1. The input is reduced to standard form first.
MinimizeLResult minimize_l(const CovarianceMatrix& gamma,
                           const std::vector<double>& schedule = kDefaultLSchedule);

// The family member with M1 = big and M5 = t (M1 + 1).
SixParamDetect boundary_family(double m1, double t);

}  // namespace cvw
