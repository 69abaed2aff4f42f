#include "cvw/nongaussian.hpp"

#include <cmath>

#include "cvw/error.hpp"
#include "cvw/gaussian_series.hpp"
#include "cvw/witness.hpp"

namespace cvw {

NgpasgSpec NgpasgSpec::make(const CovarianceMatrix& kernel, std::vector<int> adds, std::vector<int> subs) {
  const auto n = static_cast<std::size_t>(kernel.modes());
  if (adds.empty()) adds.assign(n, 0);
  if (subs.empty()) subs.assign(n, 0);
  if (adds.size() != n || subs.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "photon counts must list one entry per mode");
  for (int c : adds)
    if (c < 0) throw Error(ErrorCode::InvalidArgument, "photon counts must be non-negative");
  for (int c : subs)
    if (c < 0) throw Error(ErrorCode::InvalidArgument, "photon counts must be non-negative");
  return {kernel.matrix(), std::move(adds), std::move(subs)};
}

namespace {

// Selection matrices: u = (eps, -zeta) = P_u w, v = (eta, -xi) = P_v w for
// w = (eps, xi, eta, zeta).
ComplexMatrix select_u(int n) {
  ComplexMatrix p = ComplexMatrix::Zero(2 * n, 4 * n);
  p.block(0, 0, n, n).setIdentity();
  p.block(n, 3 * n, n, n) = -ComplexMatrix::Identity(n, n);
  return p;
}

ComplexMatrix select_v(int n) {
  ComplexMatrix p = ComplexMatrix::Zero(2 * n, 4 * n);
  p.block(0, 2 * n, n, n).setIdentity();
  p.block(n, n, n, n) = -ComplexMatrix::Identity(n, n);
  return p;
}

struct Exponents {
  ComplexMatrix q;  // chi_Q(0, w) = exp(w^T q w / 2)
  ComplexMatrix f;  // exp(f(w)) = exp(w^T f w / 2)
};

Exponents exponents(const Matrix& gamma_g, const Matrix* gamma_m) {
  const int n = static_cast<int>(gamma_g.rows() / 2);
  const ComplexMatrix gt = to_complex_cm(gamma_g).matrix();
  const ComplexMatrix s1 = vacuum_ccm(n);
  const ComplexMatrix gp = gt + s1, gm = gt - s1;
  const ComplexMatrix pu = select_u(n), pv = select_v(n);
  Exponents e;
  e.q = -0.5 * pu.transpose() * gp * pu -
        0.5 * (pu.transpose() * gm * pv + pv.transpose() * gm.transpose() * pu) -
        0.5 * pv.transpose() * gm * pv;
  e.q = 0.5 * (e.q + e.q.transpose()).eval();
  if (gamma_m) {
    const ComplexMatrix s = gt + to_complex_cm(*gamma_m).matrix();
    const ComplexMatrix l = gp * pu + gm * pv;
    e.f = 0.5 * l.transpose() * s.fullPivLu().solve(l);
    e.f = 0.5 * (e.f + e.f.transpose()).eval();
  }
  return e;
}

void require_counts(const NgpasgSpec& s) {
  const auto n = static_cast<std::size_t>(s.modes());
  if (s.adds.size() != n || s.subs.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "photon counts must list one entry per mode");
  for (std::size_t i = 0; i < n; ++i) {
    if (s.adds[i] < 0 || s.subs[i] < 0)
      throw Error(ErrorCode::InvalidArgument, "photon counts must be non-negative");
    if (s.adds[i] > kMaxPhotonCount || s.subs[i] > kMaxPhotonCount)
      throw Error(ErrorCode::UnsupportedOrder, "photon counts above 2 are not supported",
                  std::max(s.adds[i], s.subs[i]));
  }
}

}  // namespace

namespace {

void require_arguments(int n, const Vector& eps, const Vector& xi, const Vector& eta, const Vector& zeta) {
  if (eps.size() != n || xi.size() != n || eta.size() != n || zeta.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "argument vectors must have one entry per mode");
}

}  // namespace

complex q_char_zero(const Matrix& gamma_g, const Vector& eps, const Vector& xi, const Vector& eta,
                    const Vector& zeta) {
  const int n = static_cast<int>(gamma_g.rows() / 2);
  require_arguments(n, eps, xi, eta, zeta);
  const ComplexMatrix gt = to_complex_cm(gamma_g).matrix();
  const ComplexMatrix s1 = vacuum_ccm(n);
  ComplexVector u(2 * n), v(2 * n);
  u << eps.cast<complex>(), -zeta.cast<complex>();
  v << eta.cast<complex>(), -xi.cast<complex>();
  const complex quad = -0.25 * (u.transpose() * (gt + s1) * u)(0) -
                       0.5 * (u.transpose() * (gt - s1) * v)(0) -
                       0.25 * (v.transpose() * (gt - s1) * v)(0);
  return std::exp(quad);
}

QEvaluation q_evaluate(const Matrix& gamma_g, const Matrix& gamma_m, const Vector& eps, const Vector& xi,
                       const Vector& eta, const Vector& zeta) {
  const int n = static_cast<int>(gamma_g.rows() / 2);
  require_arguments(n, eps, xi, eta, zeta);
  if (gamma_m.rows() != gamma_g.rows())
    throw Error(ErrorCode::DimensionMismatch, "detect CM has the wrong mode count");
  const ComplexMatrix gt = to_complex_cm(gamma_g).matrix();
  const ComplexMatrix s1 = vacuum_ccm(n);
  QEvaluation q;
  q.g_plus = gt + s1;
  q.g_minus = gt - s1;
  q.chi = q_char_zero(gamma_g, eps, xi, eta, zeta);
  ComplexVector u(2 * n), v(2 * n);
  u << eps.cast<complex>(), -zeta.cast<complex>();
  v << eta.cast<complex>(), -xi.cast<complex>();
  const ComplexMatrix s = gt + to_complex_cm(gamma_m).matrix();
  const ComplexVector l = q.g_plus * u + q.g_minus * v;
  q.f = 0.25 * (l.transpose() * s.fullPivLu().solve(l))(0);
  return q;
}

double ngpasg_trace_limit(const NgpasgSpec& s, const Matrix& gamma_m) {
  return gaussian_overlap(s.kernel, gamma_m);
}

double ngpasg_trace_finite(const NgpasgSpec& s, const Matrix& gamma_m) {
  require_counts(s);
  if (gamma_m.rows() != s.kernel.rows())
    throw Error(ErrorCode::DimensionMismatch, "detect CM has the wrong mode count");
  const double overlap = gaussian_overlap(s.kernel, gamma_m);
  // Operator ordering a^{dag k} a^m picks the coefficient of eps^k xi^m eta^m zeta^k;
  // the same coefficient of chi_Q alone fixes the normalization.
  std::vector<int> target;
  target.insert(target.end(), s.adds.begin(), s.adds.end());
  target.insert(target.end(), s.subs.begin(), s.subs.end());
  target.insert(target.end(), s.subs.begin(), s.subs.end());
  target.insert(target.end(), s.adds.begin(), s.adds.end());
  bool any = false;
  for (int t : target) any = any || t > 0;
  if (!any) return overlap;
  const Exponents e = exponents(s.kernel, &gamma_m);
  const complex norm = exp_quadratic_coefficient<complex>(e.q, target);
  const complex full = exp_quadratic_coefficient<complex>(ComplexMatrix(e.q + e.f), target);
  if (std::abs(norm) <= 1e-300) throw Error(ErrorCode::SingularMatrix, "normalization coefficient vanishes");
  return overlap * (full / norm).real();
}

Verdict photon_added_criterion(const NgpasgSpec& s) {
  if (s.modes() != 2) throw Error(ErrorCode::DimensionMismatch, "photon-added criterion needs a two-mode kernel");
  const CovarianceMatrix kernel = validate_cm(s.kernel);
  const StandardForm sf = standard_form(kernel);
  const double scale = std::max({1.0, sf.a, sf.b});
  if (std::abs(sf.c1 - sf.c2) <= 1e-9 * scale) {
    const double c = 0.5 * (sf.c1 + sf.c2);
    if (std::abs(sf.a - sf.b) <= 1e-9 * scale && c > 0) return symmetric_two_mode(sf.a, sf.c1, sf.c2);
    return squeezed_thermal(sf.a, sf.b, c);
  }
  try {
    const MinimizeLResult l = minimize_l(kernel);
    return Verdict::from_margin("ratio_L", l.value - 1);
  } catch (const Error& e) {
    throw Error(ErrorCode::UnclassifiedKernel, std::string("kernel fits no closed form and ratio failed: ") + e.what());
  }
}

Matrix symmetric_squeezed_thermal(double n_thermal, double r) {
  const double a = (2 * n_thermal + 1) * std::cosh(2 * r), c = (2 * n_thermal + 1) * std::sinh(2 * r);
  return StandardForm{a, a, c, c}.to_matrix();
}

double fig2a_boundary(double n_thermal) {
  if (!(n_thermal >= 0)) throw Error(ErrorCode::InvalidArgument, "thermal photon number must be >= 0", n_thermal);
  return std::atanh(n_thermal / (n_thermal + 1));
}

}  // namespace cvw
