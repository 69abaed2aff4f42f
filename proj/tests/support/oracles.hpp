#pragma once

// Independent reference computations used by the unit and acceptance tests.
// Nothing here calls into the library's own algorithms beyond the value types.

#include <random>

#include "cvw/criteria.hpp"
#include "cvw/linalg.hpp"
#include "cvw/symplectic.hpp"

namespace cvw::oracle {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi);

// Symplectic building blocks in (x1, p1, ..., xn, pn) ordering.
Matrix local_squeezer(int modes, int mode, double r);       // diag(e^-r, e^r) on one mode
Matrix local_rotation(int modes, int mode, double theta);
Matrix beam_splitter(int modes, int i, int j, double theta);
// Product of random squeezers, rotations and beam splitters.
Matrix random_symplectic(int modes, Rng& rng, int layers = 3, double max_squeeze = 0.8);
// S diag(nu) S^T with symplectic eigenvalues nu_i in [1, max_nu].
Matrix random_cm(int modes, Rng& rng, double max_nu = 3.0, double max_squeeze = 0.8);
Matrix random_pure_cm(int modes, Rng& rng, double max_squeeze = 0.8);
// Random local symplectic S_A (+) S_B on two modes.
Matrix random_local_symplectic(Rng& rng);

// Standard form of the two-mode squeezed vacuum e^{r(a1^dag a2^dag - a1 a2)}.
StandardForm two_mode_squeezed_vacuum(double r);

// Rejection-sampled valid standard form with a, b in [1, max_diag].
StandardForm random_standard_form(Rng& rng, double max_diag = 4.0);

// Smallest symplectic eigenvalue of the partial transpose over the last
// `modes_b` modes, via a general (non-Hermitian) eigensolver on i sigma gamma^T.
double ppt_min_symplectic_eigenvalue(const Matrix& gamma, int modes_b);

// Pure product CM diag(u, 1/u) (+) diag(v, 1/v).
Matrix pure_product_cm(double u, double v);

// --- Fock basis -------------------------------------------------------------

ComplexMatrix annihilation(int dim);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix expm(const ComplexMatrix& m);
// Single-mode Gaussian state U_rot(theta) U_sq(r) rho_thermal(nbar) U^dag at
// dimension `work`, truncated to the leading `dim` levels.
ComplexMatrix single_mode_gaussian(int work, int dim, double nbar, double r, double theta);
// Two-mode state B(theta) (rho1 (x) rho2) B^dag with a number-conserving beam splitter.
ComplexMatrix two_mode_gaussian(const ComplexMatrix& rho1, const ComplexMatrix& rho2, double theta);
// Covariance matrix measured from a Fock-basis density matrix (vacuum = I).
Matrix fock_cm(const ComplexMatrix& rho, int modes);
// Tr(rho' M) / Tr(rho') with rho' = a^dag^k a^m rho a^dag^m a^k applied per mode.
double photon_modified_trace(const ComplexMatrix& rho, const ComplexMatrix& m, int modes,
                             const std::vector<int>& adds, const std::vector<int>& subs);

}  // namespace cvw::oracle
