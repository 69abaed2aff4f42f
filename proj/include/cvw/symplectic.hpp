#pragma once

#include <vector>

#include "cvw/linalg.hpp"

namespace cvw {

// Eigenvalue tolerance for gamma + i sigma >= 0 and for every PSD test.
inline constexpr double kPsdTolerance = 1e-9;
inline constexpr double kSymmetryTolerance = 1e-12;

// sigma = (+) (0 1; -1 0), quadrature order (x1, p1, ..., xn, pn).
Matrix symplectic_form(int modes);

// gamma + i sigma as a Hermitian matrix; its smallest eigenvalue decides physicality.
ComplexMatrix physicality_matrix(const Matrix& gamma);
double min_physicality_eigenvalue(const Matrix& gamma);

// Validated covariance matrix of an n-mode Gaussian state (vacuum = identity).
class CovarianceMatrix {
 public:
  // Throws OddDimension, NotSymmetric or NotPhysical (value = most negative eigenvalue).
  static CovarianceMatrix validate(const Matrix& entries);

  int modes() const { return static_cast<int>(m_.rows() / 2); }
  const Matrix& matrix() const { return m_; }
  double operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }
  // 2x2 block coupling modes i and j.
  Matrix block(int i, int j) const { return m_.block(2 * i, 2 * j, 2, 2); }

 private:
  explicit CovarianceMatrix(Matrix m) : m_(std::move(m)) {}
  Matrix m_;
};

inline CovarianceMatrix validate_cm(const Matrix& entries) {
  return CovarianceMatrix::validate(entries);
}

// Symplectic eigenvalues, sorted descending. The raw overload accepts any
// symmetric matrix (e.g. a partial transpose, which need not be physical).
std::vector<double> symplectic_eigenvalues(const CovarianceMatrix& gamma);
std::vector<double> symplectic_eigenvalues(const Matrix& gamma);

// Assigns every mode to a party index in [0, parties).
class ModePartition {
 public:
  explicit ModePartition(std::vector<int> party_of_mode);
  static ModePartition bipartite(int modes_a, int modes_b);

  int modes() const { return static_cast<int>(party_.size()); }
  int parties() const { return parties_; }
  int party(int mode) const { return party_[mode]; }
  std::vector<int> modes_of(int party) const;

 private:
  std::vector<int> party_;
  int parties_ = 0;
};

// Flips the sign of the momentum rows/columns of every mode in party 1 (B).
Matrix partial_transpose(const Matrix& gamma, const ModePartition& part);
Matrix partial_transpose(const CovarianceMatrix& gamma, const ModePartition& part);

// Two-mode standard form: A = diag(a,a), B = diag(b,b), C = diag(c1,-c2).
struct StandardForm {
  double a = 1, b = 1, c1 = 0, c2 = 0;

  Matrix to_matrix() const;
  CovarianceMatrix to_cm() const { return validate_cm(to_matrix()); }
};

struct StandardFormReduction {
  StandardForm form;
  Matrix local_symplectic;  // S = S_A (+) S_B with S gamma S^T = form.to_matrix()
};

// c1 >= |c2|, c1 >= 0. Throws DegenerateBlock when a local block is singular.
StandardFormReduction standard_form_reduction(const Matrix& gamma);
StandardForm standard_form(const CovarianceMatrix& gamma);

// Complex covariance matrix in (a, a^dagger) ordering:
//   [[D, O], [conj(O), conj(D)]], D = (g_p - g_x + i(g_xp + g_px))/2,
//   O = (g_p + g_x + i(g_xp - g_px))/2.
class ComplexCM {
 public:
  explicit ComplexCM(ComplexMatrix m);
  int modes() const { return static_cast<int>(m_.rows() / 2); }
  const ComplexMatrix& matrix() const { return m_; }
  Matrix to_real() const;

 private:
  ComplexMatrix m_;
};

ComplexCM to_complex_cm(const Matrix& gamma);
inline ComplexCM to_complex_cm(const CovarianceMatrix& gamma) { return to_complex_cm(gamma.matrix()); }
Matrix from_complex_cm(const ComplexMatrix& gt);

// sigma_1 (x) I_n, the complex CM of the n-mode vacuum.
ComplexMatrix vacuum_ccm(int modes);

// 2^n det(g1 + g2)^{-1/2}; throws SingularSum when det <= 1e-300.
double gaussian_overlap(const Matrix& g1, const Matrix& g2);
double gaussian_overlap(const CovarianceMatrix& g1, const CovarianceMatrix& g2);

}  // namespace cvw
