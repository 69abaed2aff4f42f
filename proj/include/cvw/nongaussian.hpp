#pragma once

#include <vector>

#include "cvw/criteria.hpp"
#include "cvw/symplectic.hpp"

namespace cvw {

// rho = N a^{dag k} a^m rho_G a^{dag m} a^k with per-mode counts k (adds), m (subs).
struct NgpasgSpec {
  Matrix kernel;  // gamma_G; validated by the constructor helpers below
  std::vector<int> adds, subs;

  static NgpasgSpec make(const CovarianceMatrix& kernel, std::vector<int> adds, std::vector<int> subs);
  int modes() const { return static_cast<int>(kernel.rows() / 2); }
};

inline constexpr int kMaxPhotonCount = 2;

// Pieces of the Q-operator characteristic function at mu = 0.
struct QEvaluation {
  ComplexMatrix g_plus, g_minus;  // g~_G +- s1 (x) I
  complex f = 0;                  // exponent picked up from the detect operator
  complex chi = 1;                // chi_Q(0, eps, xi, eta, zeta)
};

QEvaluation q_evaluate(const Matrix& gamma_g, const Matrix& gamma_m, const Vector& eps, const Vector& xi,
                       const Vector& eta, const Vector& zeta);
complex q_char_zero(const Matrix& gamma_g, const Vector& eps, const Vector& xi, const Vector& eta,
                    const Vector& zeta);

// Tr(rho M) for the Gaussian detect operator with CM gamma_m, from exact Taylor
// coefficients of the Q generating function. Throws UnsupportedOrder for counts > 2.
double ngpasg_trace_finite(const NgpasgSpec& s, const Matrix& gamma_m);

// 2^n / sqrt|det(gamma_G + gamma_M)|, the gamma_M -> infinity value. Throws SingularSum.
double ngpasg_trace_limit(const NgpasgSpec& s, const Matrix& gamma_m);

// Separability verdict of the Gaussian kernel (the photon counts never change it).
// Throws UnclassifiedKernel if the ratio minimization fails on an irregular kernel.
Verdict photon_added_criterion(const NgpasgSpec& s);

// Two-mode symmetric squeezed thermal CM: a = (2N+1) cosh 2r, c = (2N+1) sinh 2r.
Matrix symmetric_squeezed_thermal(double n_thermal, double r);

// Squeezing at which the symmetric squeezed thermal kernel turns entangled: atanh(N/(N+1)).
double fig2a_boundary(double n_thermal);

}  // namespace cvw
