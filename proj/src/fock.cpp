#include "cvw/fock.hpp"

#include <cmath>
#include <ostream>
#include <random>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "cvw/error.hpp"
#include "cvw/gaussian_series.hpp"

namespace cvw {

namespace {

Matrix presqueezed(const SixParamDetect& d, double x, double y) {
  const Eigen::Vector4d s_inv(1 / std::sqrt(x), std::sqrt(x), 1 / std::sqrt(y), std::sqrt(y));
  return s_inv.asDiagonal() * d.to_matrix() * s_inv.asDiagonal();
}

ComplexMatrix sigma3_kron_identity(int modes) {
  Eigen::VectorXcd diag(2 * modes);
  diag.head(modes).setOnes();
  diag.tail(modes).setConstant(-1.0);
  return diag.asDiagonal();
}

}  // namespace

BetaFock beta_fock(const SixParamDetect& d, double x, double y) {
  if (!(x > 0 && y > 0)) throw Error(ErrorCode::InvalidArgument, "pre-squeeze parameters must be positive");
  const ComplexMatrix gt = to_complex_cm(presqueezed(d, x, y)).matrix();
  const ComplexMatrix s1 = vacuum_ccm(2), s3 = sigma3_kron_identity(2);
  const ComplexMatrix inner = 0.5 * (gt + s1);
  Eigen::FullPivLU<ComplexMatrix> lu(inner);
  if (!lu.isInvertible() || std::abs(inner.determinant()) <= 1e-300)
    throw Error(ErrorCode::SingularMatrix, "(g~ + s1)/2 is singular");
  BetaFock out;
  out.beta = s3 * lu.inverse() * s3;
  out.generator = s1 + out.beta;
  out.sqrt_det = std::sqrt(out.beta.determinant()).real();
  return out;
}

Matrix GeneratingCoeffs::generator() const {
  Matrix a(4, 4);
  a << 0, n1, n2, n3,
       n1, 0, n3, n4,
       n2, n3, 0, n1,
       n3, n4, n1, 0;
  return a;
}

GeneratingCoeffs generating_coeffs(const SixParamDetect& d) {
  const LambdaResult lv = lambda_product_vacuum(d);
  return generating_coeffs(d, lv.x, lv.y);
}

GeneratingCoeffs generating_coeffs(const SixParamDetect& d, double x, double y) {
  GeneratingCoeffs g;
  g.x = x;
  g.y = y;
  const double sxy = std::sqrt(x * y);
  auto& k = g.k;
  k[0] = 0.5 * (d.m2 * x - d.m1 / x);
  k[1] = 0.5 * (d.m2 * x + d.m1 / x) + 1;
  k[2] = 0.5 * (d.m4 * y - d.m3 / y);
  k[3] = 0.5 * (d.m4 * y + d.m3 / y) + 1;
  k[4] = -0.5 * (sxy * d.m6 + d.m5 / sxy);
  k[5] = 0.5 * (-sxy * d.m6 + d.m5 / sxy);
  // g~_M + s1 (x) I = [[U, V], [V, U]]; U carries the mode-diagonal D-block.
  Eigen::Matrix2d u, v;
  u << k[0], k[4], k[4], k[2];
  v << k[1], k[5], k[5], k[3];
  const Eigen::Matrix2d uinv_v = u.inverse() * v;
  const Eigen::Matrix2d t = (u - v * uinv_v).inverse();
  if (!t.allFinite()) throw Error(ErrorCode::SingularMatrix, "U or U - V U^{-1} V is singular");
  const double diag = std::max(std::abs(t(0, 0)), std::abs(t(1, 1)));
  if (diag > 1e-6)
    throw Error(ErrorCode::StationarityViolated, "diagonal of T does not vanish at (x, y)", diag);
  const Eigen::Matrix2d off = Eigen::Matrix2d::Identity() + 2 * uinv_v * t;
  g.n1 = t(0, 1) + t(1, 0);
  g.n2 = off(0, 0);
  g.n3 = 0.5 * (off(0, 1) + off(1, 0));
  g.n4 = off(1, 1);
  g.sqrt_det_beta = 4 / std::sqrt(presqueezed_det(d, x, y));
  return g;
}

FockOperator::FockOperator(int cutoff, std::vector<complex> elements, double sqrt_det_beta,
                           SixParamDetect detect, double x, double y)
    : d_(cutoff), e_(std::move(elements)), sqrt_det_beta_(sqrt_det_beta), detect_(detect), x_(x), y_(y) {
  if (cutoff < 1) throw Error(ErrorCode::InvalidArgument, "cutoff must be >= 1");
  if (e_.size() != static_cast<std::size_t>(cutoff) * cutoff * cutoff * cutoff)
    throw Error(ErrorCode::DimensionMismatch, "element count does not match cutoff^4");
}

FockOperator fock_elements(const SixParamDetect& d, int cutoff) {
  const LambdaResult lv = lambda_product_vacuum(d);
  return fock_elements(d, cutoff, lv.x, lv.y);
}

FockOperator fock_elements(const SixParamDetect& d, int cutoff, double x, double y) {
  if (cutoff < 1 || cutoff > 64) throw Error(ErrorCode::InvalidArgument, "cutoff must lie in [1, 64]");
  const BetaFock bf = beta_fock(d, x, y);
  const ExpQuadraticSeries<complex> series(bf.generator, {cutoff, cutoff, cutoff, cutoff});
  std::vector<double> half_log_fact(cutoff);
  for (int n = 0; n < cutoff; ++n) half_log_fact[n] = 0.5 * std::lgamma(n + 1.0);

  std::vector<complex> e(static_cast<std::size_t>(cutoff) * cutoff * cutoff * cutoff);
  std::size_t out = 0;
  for (int k1 = 0; k1 < cutoff; ++k1)
    for (int k2 = 0; k2 < cutoff; ++k2)
      for (int m1 = 0; m1 < cutoff; ++m1)
        for (int m2 = 0; m2 < cutoff; ++m2) {
          const std::array<int, 4> p{k1, k2, m1, m2};
          const double scale = std::exp(half_log_fact[k1] + half_log_fact[k2] + half_log_fact[m1] +
                                        half_log_fact[m2]);
          e[out++] = bf.sqrt_det * scale * series(p);
        }
  return FockOperator(cutoff, std::move(e), bf.sqrt_det, d, x, y);
}

ProductStateVec::ProductStateVec(ComplexVector a, ComplexVector b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.size() == 0 || b_.size() == 0) throw Error(ErrorCode::InvalidArgument, "empty state vector");
  if (std::abs(a_.norm() - 1) > 1e-12 || std::abs(b_.norm() - 1) > 1e-12)
    throw Error(ErrorCode::InvalidArgument, "product state vectors must be normalized");
}

ProductStateVec ProductStateVec::normalized(ComplexVector a, ComplexVector b) {
  a.normalize();
  b.normalize();
  return ProductStateVec(std::move(a), std::move(b));
}

ProductStateVec ProductStateVec::vacuum(int cutoff) {
  ComplexVector v = ComplexVector::Zero(cutoff);
  v(0) = 1;
  return ProductStateVec(v, v);
}

double mean_photon(const ComplexVector& v) {
  double s = 0;
  for (Eigen::Index n = 0; n < v.size(); ++n) s += double(n) * std::norm(v(n));
  return s / v.squaredNorm();
}

double m0_eval(const GeneratingCoeffs& g, const ProductStateVec& psi, int truncation) {
  const ComplexVector& a = psi.a();
  const ComplexVector& b = psi.b();
  const int da = static_cast<int>(a.size()), db = static_cast<int>(b.size());
  std::vector<double> lf(4 * truncation + 1);
  for (std::size_t n = 0; n < lf.size(); ++n) lf[n] = std::lgamma(n + 1.0);
  auto pw = [](double base, int e) { return e == 0 ? 1.0 : std::pow(base, e); };

  complex sum = 0;
  for (int k = 0; k < truncation; ++k)
    for (int l = 0; l < truncation; ++l)
      for (int m = 0; m < truncation; ++m)
        for (int n = 0; n < truncation; ++n)
          for (int i = 0; i < truncation; ++i)
            for (int j = 0; j < truncation; ++j) {
              const int k1 = k + m + i, k2 = l + n + i, m1 = k + n + j, m2 = l + m + j;
              if (k1 >= da || k2 >= db || m1 >= da || m2 >= db) continue;
              const double coeff = pw(g.n1, i + j) * pw(g.n2, k) * pw(g.n3, m + n) * pw(g.n4, l);
              if (coeff == 0) continue;
              const double fact = std::exp(0.5 * (lf[k1] + lf[k2] + lf[m1] + lf[m2]) - lf[k] - lf[l] -
                                           lf[m] - lf[n] - lf[i] - lf[j]);
              sum += std::conj(a(k1)) * std::conj(b(k2)) * a(m1) * b(m2) * (coeff * fact);
            }
  return sum.real();
}

complex expectation(const FockOperator& m, const ProductStateVec& psi) {
  const ComplexMatrix c = conditional_matrix(m, psi.b());
  return psi.a().dot(c * psi.a());  // dot conjugates its first argument
}

ComplexMatrix conditional_matrix(const FockOperator& m, const ComplexVector& b) {
  const int d = m.cutoff();
  if (b.size() != d) throw Error(ErrorCode::DimensionMismatch, "vector length differs from cutoff");
  ComplexMatrix c = ComplexMatrix::Zero(d, d);
  for (int k1 = 0; k1 < d; ++k1)
    for (int m1 = 0; m1 < d; ++m1) {
      complex s = 0;
      for (int k2 = 0; k2 < d; ++k2)
        for (int m2 = 0; m2 < d; ++m2) s += std::conj(b(k2)) * m(k1, k2, m1, m2) * b(m2);
      c(k1, m1) = s;
    }
  return c;
}

ComplexMatrix conditional_matrix_mode2(const FockOperator& m, const ComplexVector& a) {
  const int d = m.cutoff();
  if (a.size() != d) throw Error(ErrorCode::DimensionMismatch, "vector length differs from cutoff");
  ComplexMatrix c = ComplexMatrix::Zero(d, d);
  for (int k2 = 0; k2 < d; ++k2)
    for (int m2 = 0; m2 < d; ++m2) {
      complex s = 0;
      for (int k1 = 0; k1 < d; ++k1)
        for (int m1 = 0; m1 < d; ++m1) s += std::conj(a(k1)) * m(k1, k2, m1, m2) * a(m1);
      c(k2, m2) = s;
    }
  return c;
}

AlternationResult alternate_maximize(const FockOperator& m, std::uint64_t seed, int max_rounds) {
  const int d = m.cutoff();
  const ComplexVector start = random_unit_vector(d, seed);
  const SixParamDetect& det = m.detect();
  // Mode 1 goes first unless M1 M2 > M3 M4 (ties keep the order).
  bool update_mode1 = !(det.m1 * det.m2 > det.m3 * det.m4);

  AlternationResult r;
  r.psi1 = start;
  r.psi2 = start;
  while (r.rounds < max_rounds) {
    ++r.rounds;
    ComplexMatrix c = update_mode1 ? conditional_matrix(m, r.psi2) : conditional_matrix_mode2(m, r.psi1);
    c = 0.5 * (c + c.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(c);
    (update_mode1 ? r.psi1 : r.psi2) = es.eigenvectors().col(d - 1);
    r.m0 = es.eigenvalues()(d - 1) / m.sqrt_det_beta();
    r.m0_trace.push_back(r.m0);
    r.photon_trace.push_back(0.5 * (mean_photon(r.psi1) + mean_photon(r.psi2)));
    update_mode1 = !update_mode1;
    if (r.m0 > kConvergedM0) {
      r.converged = true;
      break;
    }
  }
  return r;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  // splitmix64 finalizer over (master, index)
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

SixParamDetect random_detect_operator(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Eigen::Matrix4d r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) r(i, j) = normal(rng);
    const Eigen::Matrix4d g = r * r.transpose() + kDetectRegularization * Eigen::Matrix4d::Identity();
    const SixParamDetect d{g(0, 0), g(1, 1), g(2, 2), g(3, 3), g(0, 2), -g(1, 3)};
    if (d.satisfies(PositivityRegime::Psd)) return d;
  }
  // The pattern projection keeps two principal 2x2 submatrices of a PD matrix,
  // so rejection never exhausts in practice.
  throw Error(ErrorCode::NotPositive, "rejection sampling exhausted");
}

ComplexVector random_unit_vector(int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexVector v(dim);
  for (int i = 0; i < dim; ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(i) = complex(re, im);
  }
  return v.normalized();
}

std::vector<SweepRow> sweep_fig1(int samples, int cutoff, std::uint64_t seed) {
  std::vector<SweepRow> rows;
  rows.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    SweepRow row;
    row.seed = derive_seed(seed, static_cast<std::uint64_t>(i));
    row.detect = random_detect_operator(derive_seed(row.seed, 0));
    const FockOperator m = fock_elements(row.detect, cutoff);
    const AlternationResult r = alternate_maximize(m, derive_seed(row.seed, 1));
    row.avg_photon = r.photon_trace.back();
    row.m0 = r.m0;
    row.rounds = r.rounds;
    row.converged = r.converged;
    rows.push_back(row);
  }
  return rows;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "seed,avg_photon,m0,rounds,converged\n";
  for (const auto& r : rows)
    fmt::print(os, "{},{:.17g},{:.17g},{},{}\n", r.seed, r.avg_photon, r.m0, r.rounds, r.converged ? 1 : 0);
}

void write_failures_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "seed,m1,m2,m3,m4,m5,m6,avg_photon,m0\n";
  for (const auto& r : rows) {
    if (!(r.m0 > 1 + 1e-6)) continue;
    const auto& d = r.detect;
    fmt::print(os, "{},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}\n", r.seed, d.m1,
               d.m2, d.m3, d.m4, d.m5, d.m6, r.avg_photon, r.m0);
  }
}

}  // namespace cvw
