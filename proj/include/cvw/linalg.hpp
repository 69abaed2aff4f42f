#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace cvw {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using complex = std::complex<double>;

// Smallest eigenvalue of a symmetric (real) or Hermitian (complex) matrix.
double min_eigenvalue(const Matrix& m);
double min_eigenvalue(const ComplexMatrix& m);

// Block-diagonal direct sum.
Matrix direct_sum(const std::vector<Matrix>& blocks);

// Largest |m - m^T| entry relative to the largest |m| entry (0 for the zero matrix).
double relative_asymmetry(const Matrix& m);

}  // namespace cvw
