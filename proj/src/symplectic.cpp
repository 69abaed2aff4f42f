#include "cvw/symplectic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "cvw/error.hpp"

namespace cvw {

Matrix symplectic_form(int modes) {
  Matrix s = Matrix::Zero(2 * modes, 2 * modes);
  for (int i = 0; i < modes; ++i) {
    s(2 * i, 2 * i + 1) = 1.0;
    s(2 * i + 1, 2 * i) = -1.0;
  }
  return s;
}

ComplexMatrix physicality_matrix(const Matrix& gamma) {
  const int n = static_cast<int>(gamma.rows() / 2);
  return gamma.cast<complex>() + complex(0, 1) * symplectic_form(n).cast<complex>();
}

double min_physicality_eigenvalue(const Matrix& gamma) {
  return min_eigenvalue(physicality_matrix(gamma));
}

CovarianceMatrix CovarianceMatrix::validate(const Matrix& entries) {
  if (entries.rows() != entries.cols() || entries.rows() % 2 != 0 || entries.rows() == 0)
    throw Error(ErrorCode::OddDimension,
                "covariance matrix must be square with even, non-zero dimension");
  if (!entries.allFinite())
    throw Error(ErrorCode::NotSymmetric, "covariance matrix has non-finite entries");
  const double asym = relative_asymmetry(entries);
  if (asym > kSymmetryTolerance)
    throw Error(ErrorCode::NotSymmetric, "relative asymmetry exceeds 1e-12", asym);
  Matrix sym = 0.5 * (entries + entries.transpose());
  const double lmin = min_physicality_eigenvalue(sym);
  if (lmin < -kPsdTolerance)
    throw Error(ErrorCode::NotPhysical, "gamma + i sigma has a negative eigenvalue", lmin);
  return CovarianceMatrix(std::move(sym));
}

std::vector<double> symplectic_eigenvalues(const Matrix& gamma) {
  const int n = static_cast<int>(gamma.rows() / 2);
  const Matrix sigma = symplectic_form(n);
  std::vector<double> nu;
  nu.reserve(n);
  Eigen::LLT<Matrix> llt(gamma);
  if (llt.info() == Eigen::Success) {
    // i sigma gamma is similar to the Hermitian i L^T sigma L; its spectrum is +-nu.
    const Matrix l = llt.matrixL();
    const ComplexMatrix h = complex(0, 1) * (l.transpose() * sigma * l).cast<complex>();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
    for (int i = 0; i < n; ++i) nu.push_back(es.eigenvalues()(2 * n - 1 - i));
  } else {
    Eigen::ComplexEigenSolver<ComplexMatrix> es((complex(0, 1) * sigma * gamma).cast<complex>().eval(),
                                                false);
    std::vector<double> moduli;
    for (int i = 0; i < 2 * n; ++i) moduli.push_back(std::abs(es.eigenvalues()(i)));
    std::sort(moduli.begin(), moduli.end(), std::greater<>());
    for (int i = 0; i < n; ++i) nu.push_back(moduli[2 * i]);
  }
  std::sort(nu.begin(), nu.end(), std::greater<>());
  return nu;
}

std::vector<double> symplectic_eigenvalues(const CovarianceMatrix& gamma) {
  return symplectic_eigenvalues(gamma.matrix());
}

ModePartition::ModePartition(std::vector<int> party_of_mode) : party_(std::move(party_of_mode)) {
  if (party_.empty()) throw Error(ErrorCode::InvalidArgument, "partition has no modes");
  for (int p : party_)
    if (p < 0) throw Error(ErrorCode::InvalidArgument, "negative party index");
  parties_ = *std::max_element(party_.begin(), party_.end()) + 1;
  for (int p = 0; p < parties_; ++p)
    if (std::find(party_.begin(), party_.end(), p) == party_.end())
      throw Error(ErrorCode::InvalidArgument, "every party needs at least one mode");
}

ModePartition ModePartition::bipartite(int modes_a, int modes_b) {
  std::vector<int> p(modes_a, 0);
  p.insert(p.end(), modes_b, 1);
  return ModePartition(std::move(p));
}

std::vector<int> ModePartition::modes_of(int party) const {
  std::vector<int> out;
  for (int i = 0; i < modes(); ++i)
    if (party_[i] == party) out.push_back(i);
  return out;
}

Matrix partial_transpose(const Matrix& gamma, const ModePartition& part) {
  if (gamma.rows() != 2 * part.modes())
    throw Error(ErrorCode::DimensionMismatch, "partition does not match the mode count");
  if (part.parties() != 2)
    throw Error(ErrorCode::InvalidArgument, "partial transpose needs a bipartition");
  Vector flip = Vector::Ones(gamma.rows());
  for (int m : part.modes_of(1)) flip(2 * m + 1) = -1.0;
  return flip.asDiagonal() * gamma * flip.asDiagonal();
}

Matrix partial_transpose(const CovarianceMatrix& gamma, const ModePartition& part) {
  return partial_transpose(gamma.matrix(), part);
}

Matrix StandardForm::to_matrix() const {
  Matrix g = Matrix::Zero(4, 4);
  g(0, 0) = g(1, 1) = a;
  g(2, 2) = g(3, 3) = b;
  g(0, 2) = g(2, 0) = c1;
  g(1, 3) = g(3, 1) = -c2;
  return g;
}

namespace {

// Local symplectic S (det 1) with S block S^T = sqrt(det block) * I.
Eigen::Matrix2d local_normalizer(const Eigen::Matrix2d& block, double& scale) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(block);
  const Eigen::Vector2d l = es.eigenvalues();
  if (l.minCoeff() <= 1e-300) throw Error(ErrorCode::DegenerateBlock, "local block is singular", l.minCoeff());
  Eigen::Matrix2d r = es.eigenvectors();
  if (r.determinant() < 0) r.col(1) *= -1.0;
  scale = std::sqrt(l(0) * l(1));
  Eigen::Vector2d d(std::sqrt(scale / l(0)), std::sqrt(scale / l(1)));
  return d.asDiagonal() * r.transpose();
}

}  // namespace

StandardFormReduction standard_form_reduction(const Matrix& gamma) {
  if (gamma.rows() != 4 || gamma.cols() != 4)
    throw Error(ErrorCode::DimensionMismatch, "standard form needs a two-mode CM");
  double a = 0, b = 0;
  const Eigen::Matrix2d sa = local_normalizer(gamma.block<2, 2>(0, 0), a);
  const Eigen::Matrix2d sb = local_normalizer(gamma.block<2, 2>(2, 2), b);
  const Eigen::Matrix2d c = sa * gamma.block<2, 2>(0, 2) * sb.transpose();

  Eigen::JacobiSVD<Eigen::Matrix2d> svd(c, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Matrix2d u = svd.matrixU(), v = svd.matrixV();
  const double du = u.determinant(), dv = v.determinant();
  u.col(1) *= du;  // now proper rotations
  v.col(1) *= dv;

  StandardFormReduction out;
  out.form.a = a;
  out.form.b = b;
  out.form.c1 = svd.singularValues()(0);
  out.form.c2 = -du * dv * svd.singularValues()(1);
  out.local_symplectic = Matrix::Zero(4, 4);
  out.local_symplectic.block<2, 2>(0, 0) = u.transpose() * sa;
  out.local_symplectic.block<2, 2>(2, 2) = v.transpose() * sb;
  return out;
}

StandardForm standard_form(const CovarianceMatrix& gamma) {
  return standard_form_reduction(gamma.matrix()).form;
}

ComplexCM::ComplexCM(ComplexMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() % 2 != 0)
    throw Error(ErrorCode::OddDimension, "complex CM must be square with even dimension");
}

Matrix ComplexCM::to_real() const { return from_complex_cm(m_); }

ComplexCM to_complex_cm(const Matrix& gamma) {
  if (gamma.rows() != gamma.cols() || gamma.rows() % 2 != 0)
    throw Error(ErrorCode::OddDimension, "CM must be square with even dimension");
  const Eigen::Index n = gamma.rows() / 2;
  Matrix gx(n, n), gp(n, n), gxp(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      gx(i, j) = gamma(2 * i, 2 * j);
      gp(i, j) = gamma(2 * i + 1, 2 * j + 1);
      gxp(i, j) = gamma(2 * i, 2 * j + 1);
    }
  const Matrix gpx = gxp.transpose();
  const complex I(0, 1);
  const ComplexMatrix d = 0.5 * ((gp - gx).cast<complex>() + I * (gxp + gpx).cast<complex>());
  const ComplexMatrix o = 0.5 * ((gp + gx).cast<complex>() + I * (gxp - gpx).cast<complex>());
  ComplexMatrix gt(2 * n, 2 * n);
  gt << d, o, o.conjugate(), d.conjugate();
  return ComplexCM(std::move(gt));
}

Matrix from_complex_cm(const ComplexMatrix& gt) {
  const Eigen::Index n = gt.rows() / 2;
  const ComplexMatrix d = gt.topLeftCorner(n, n), o = gt.topRightCorner(n, n);
  const Matrix gp = d.real() + o.real();
  const Matrix gx = o.real() - d.real();
  const Matrix gxp = d.imag() + o.imag();
  Matrix gamma(2 * n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      gamma(2 * i, 2 * j) = gx(i, j);
      gamma(2 * i + 1, 2 * j + 1) = gp(i, j);
      gamma(2 * i, 2 * j + 1) = gxp(i, j);
      gamma(2 * i + 1, 2 * j) = gxp(j, i);
    }
  return gamma;
}

ComplexMatrix vacuum_ccm(int modes) {
  ComplexMatrix s = ComplexMatrix::Zero(2 * modes, 2 * modes);
  s.topRightCorner(modes, modes).setIdentity();
  s.bottomLeftCorner(modes, modes).setIdentity();
  return s;
}

double gaussian_overlap(const Matrix& g1, const Matrix& g2) {
  if (g1.rows() != g2.rows() || g1.cols() != g2.cols() || g1.rows() % 2 != 0)
    throw Error(ErrorCode::DimensionMismatch, "overlap needs equal mode counts");
  const double det = (g1 + g2).determinant();
  if (det <= 1e-300) throw Error(ErrorCode::SingularSum, "det(g1 + g2) <= 1e-300", det);
  const int n = static_cast<int>(g1.rows() / 2);
  return std::pow(2.0, n) / std::sqrt(det);
}

double gaussian_overlap(const CovarianceMatrix& g1, const CovarianceMatrix& g2) {
  return gaussian_overlap(g1.matrix(), g2.matrix());
}

}  // namespace cvw
