#include "cvw/witness.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include <boost/math/tools/minima.hpp>

#include "cvw/error.hpp"

namespace cvw {

Matrix SixParamDetect::to_matrix() const {
  Matrix g(4, 4);
  g << m1, 0, m5, 0,
       0, m2, 0, -m6,
       m5, 0, m3, 0,
       0, -m6, 0, m4;
  return g;
}

bool SixParamDetect::satisfies(PositivityRegime regime) const {
  const Matrix g = to_matrix();
  if (!g.allFinite()) return false;
  return (regime == PositivityRegime::Psd ? min_eigenvalue(g) : min_physicality_eigenvalue(g)) >=
         -kPsdTolerance;
}

void SixParamDetect::require(PositivityRegime regime) const {
  const Matrix g = to_matrix();
  if (regime == PositivityRegime::Psd) {
    const double l = min_eigenvalue(g);
    if (!(l >= -kPsdTolerance)) throw Error(ErrorCode::NotPositive, "gamma_M is not positive semidefinite", l);
  } else {
    const double l = min_physicality_eigenvalue(g);
    if (!(l >= -kPsdTolerance)) throw Error(ErrorCode::NotPhysical, "gamma_M + i sigma is not positive", l);
  }
}

OmegaMembership omega_residuals(const SixParamDetect& d) {
  return {std::abs(d.m1 * d.m2 - d.m3 * d.m4),
          std::abs((d.m1 * d.m3 - d.m5 * d.m5) * (d.m2 * d.m4 - d.m6 * d.m6) - 1)};
}

Matrix TwoFoldKernelCM::gamma_2m() const {
  const Eigen::Index k = zeta.rows();
  Matrix g(2 * k, 2 * k);
  g << zeta, omega, omega, zeta;
  return g;
}

namespace {

struct Blocks {
  Matrix g1, g2, g3;
};

Blocks split(const Matrix& gamma_m, int modes_a) {
  const Eigen::Index ka = 2 * modes_a, kb = gamma_m.rows() - ka;
  if (gamma_m.rows() != gamma_m.cols() || modes_a <= 0 || kb <= 0 || kb % 2 != 0)
    throw Error(ErrorCode::DimensionMismatch, "detect CM does not split into two parties");
  return {gamma_m.topLeftCorner(ka, ka), gamma_m.bottomRightCorner(kb, kb),
          gamma_m.topRightCorner(ka, kb)};
}

}  // namespace

TwoFoldKernelCM two_fold_kernel(const Matrix& gamma_m, int modes_a) {
  const Blocks b = split(gamma_m, modes_a);
  Eigen::FullPivLU<Matrix> lu(b.g2);
  if (!lu.isInvertible() || std::abs(b.g2.determinant()) <= 1e-300)
    throw Error(ErrorCode::SingularGamma2, "gamma_2 is singular");
  TwoFoldKernelCM k;
  k.omega = -0.5 * b.g3 * lu.solve(Matrix(b.g3.transpose()));
  k.omega = 0.5 * (k.omega + k.omega.transpose());
  k.zeta = b.g1 + k.omega;
  return k;
}

FixedPoint fixed_point_ab(const Matrix& gamma_m, int modes_a, double tol, int max_iter) {
  const Blocks b = split(gamma_m, modes_a);
  FixedPoint fp;
  fp.gamma_b = Matrix::Identity(b.g2.rows(), b.g2.cols());
  fp.gamma_a = b.g1;
  for (int it = 1; it <= max_iter; ++it) {
    const Matrix ga = b.g1 - b.g3 * (b.g2 + fp.gamma_b).ldlt().solve(Matrix(b.g3.transpose()));
    const Matrix gb = b.g2 - b.g3.transpose() * (b.g1 + ga).ldlt().solve(b.g3);
    const double change = std::max((ga - fp.gamma_a).cwiseAbs().maxCoeff(),
                                   (gb - fp.gamma_b).cwiseAbs().maxCoeff());
    fp.gamma_a = 0.5 * (ga + ga.transpose());
    fp.gamma_b = 0.5 * (gb + gb.transpose());
    fp.iterations = it;
    if (!fp.gamma_a.allFinite() || !fp.gamma_b.allFinite()) break;
    if (change < tol) return fp;
  }
  throw Error(ErrorCode::NoConvergence, "fixed-point iteration did not converge", fp.iterations);
}

double presqueezed_det(const SixParamDetect& d, double x, double y) {
  const double p = (d.m1 + x) * (d.m3 + y) - d.m5 * d.m5;
  const double q = (d.m2 + 1 / x) * (d.m4 + 1 / y) - d.m6 * d.m6;
  return p * q;
}

std::pair<double, double> stationarity_residuals(const SixParamDetect& d, double x, double y) {
  const double r1 = (d.m3 + y) * (d.m2 * (d.m4 + 1 / y) - d.m6 * d.m6) -
                    (d.m4 + 1 / y) * (d.m1 * (d.m3 + y) - d.m5 * d.m5) / (x * x);
  const double r2 = (d.m1 + x) * (d.m4 * (d.m2 + 1 / x) - d.m6 * d.m6) -
                    (d.m2 + 1 / x) * (d.m3 * (d.m1 + x) - d.m5 * d.m5) / (y * y);
  return {r1, r2};
}

namespace {

// ln F and its gradient/Hessian in log coordinates u = ln x, v = ln y.
struct LogDet {
  double value;
  Eigen::Vector2d grad;
  Eigen::Matrix2d hess;
};

LogDet log_det(const SixParamDetect& d, double u, double v) {
  const double x = std::exp(u), y = std::exp(v);
  const double p = (d.m1 + x) * (d.m3 + y) - d.m5 * d.m5;
  const double q = (d.m2 + 1 / x) * (d.m4 + 1 / y) - d.m6 * d.m6;
  const double pu = x * (d.m3 + y), pv = y * (d.m1 + x), puv = x * y;
  const double qu = -(d.m4 + 1 / y) / x, qv = -(d.m2 + 1 / x) / y, quv = 1 / (x * y);
  const double f = p * q;
  const Eigen::Vector2d g(pu * q + p * qu, pv * q + p * qv);
  Eigen::Matrix2d h;
  h(0, 0) = pu * q + 2 * pu * qu - p * qu;
  h(1, 1) = pv * q + 2 * pv * qv - p * qv;
  h(0, 1) = h(1, 0) = puv * q + pu * qv + pv * qu + p * quv;
  LogDet out;
  out.value = std::log(f);
  out.grad = g / f;
  out.hess = h / f - out.grad * out.grad.transpose();
  return out;
}

constexpr double kLogGridHalfWidth = 12.0;
constexpr int kLogGridPoints = 97;

}  // namespace

LambdaResult lambda_product_vacuum(const SixParamDetect& d) {
  d.require(PositivityRegime::Psd);

  double best = std::numeric_limits<double>::infinity();
  Eigen::Vector2d z(0, 0);
  for (int i = 0; i < kLogGridPoints; ++i)
    for (int j = 0; j < kLogGridPoints; ++j) {
      const double u = -kLogGridHalfWidth + 2 * kLogGridHalfWidth * i / (kLogGridPoints - 1);
      const double v = -kLogGridHalfWidth + 2 * kLogGridHalfWidth * j / (kLogGridPoints - 1);
      const double f = presqueezed_det(d, std::exp(u), std::exp(v));
      if (f < best) {
        best = f;
        z = {u, v};
      }
    }
  if (!(best > 0)) throw Error(ErrorCode::OptimFailure, "presqueezed determinant is not positive", best);
  const double grid_best = best;

  // Safeguarded Newton on ln F: fall back to steepest descent when the Hessian
  // is not positive definite, halve steps that do not decrease F.
  LogDet cur = log_det(d, z(0), z(1));
  for (int it = 0; it < 200; ++it) {
    if (cur.grad.norm() < 1e-15) break;
    Eigen::Vector2d step;
    Eigen::LLT<Eigen::Matrix2d> llt(cur.hess);
    if (llt.info() == Eigen::Success && cur.hess.determinant() > 0)
      step = -llt.solve(cur.grad);
    else
      step = -cur.grad;
    if (step.norm() > 2.0) step *= 2.0 / step.norm();
    bool moved = false;
    for (int h = 0; h < 60; ++h) {
      const Eigen::Vector2d trial = z + step;
      const LogDet next = log_det(d, trial(0), trial(1));
      if (std::isfinite(next.value) && next.value <= cur.value) {
        moved = (trial - z).norm() > 0;
        z = trial;
        cur = next;
        break;
      }
      step *= 0.5;
    }
    if (!moved || step.norm() < 1e-15) break;
  }

  LambdaResult r;
  r.x = std::exp(z(0));
  r.y = std::exp(z(1));
  r.min_det = presqueezed_det(d, r.x, r.y);
  if (!(r.min_det <= grid_best * (1 + 1e-6)))
    throw Error(ErrorCode::OptimFailure, "Newton refinement disagrees with the grid minimum",
                r.min_det / grid_best - 1);
  r.lambda = 4 / std::sqrt(r.min_det);
  return r;
}

double l_ratio(const CovarianceMatrix& gamma, const SixParamDetect& d) {
  if (gamma.modes() != 2) throw Error(ErrorCode::DimensionMismatch, "ratio needs a two-mode CM");
  d.require(PositivityRegime::Physical);
  const LambdaResult lv = lambda_product_vacuum(d);
  return (gamma.matrix() + d.to_matrix()).determinant() / lv.min_det;
}

SixParamDetect boundary_family(double m1, double t) {
  const double m3 = 1 + t * t * (m1 + 1), m5 = t * (m1 + 1);
  return {m1, m1, m3, m3, m5, m5};
}

namespace {

// Minimizes a 1-D function on [lo, hi]: dense scan then Brent refinement.
std::pair<double, double> scan_minimize(const std::function<double(double)>& f, double lo, double hi,
                                        int points) {
  double best_t = lo, best_v = std::numeric_limits<double>::infinity();
  int best_i = 0;
  for (int i = 0; i < points; ++i) {
    const double t = lo + (hi - lo) * i / (points - 1);
    const double v = f(t);
    if (v < best_v) {
      best_v = v;
      best_t = t;
      best_i = i;
    }
  }
  const double a = lo + (hi - lo) * std::max(best_i - 1, 0) / (points - 1);
  const double b = lo + (hi - lo) * std::min(best_i + 1, points - 1) / (points - 1);
  if (b > a) {
    const auto r = boost::math::tools::brent_find_minima(f, a, b, 52);
    if (r.second < best_v) return {r.first, r.second};
  }
  return {best_t, best_v};
}

// M1 -> infinity limit of the ratio for orientation (p, q):
// prod_i [(q + 1) + (p - 1) t^2 - 2 c_i t] / 2 over |t| <= 1.
double family_limit(double p, double q, double c1, double c2) {
  auto g = [&](double t) {
    const double f1 = ((q + 1) + (p - 1) * t * t - 2 * c1 * t) / 2;
    const double f2 = ((q + 1) + (p - 1) * t * t - 2 * c2 * t) / 2;
    return f1 * f2;
  };
  return scan_minimize(g, -1.0, 1.0, 2001).second;
}

}  // namespace

MinimizeLResult minimize_l(const CovarianceMatrix& gamma, const std::vector<double>& schedule) {
  if (gamma.modes() != 2) throw Error(ErrorCode::DimensionMismatch, "ratio needs a two-mode CM");
  const StandardForm sf = standard_form(gamma);
  const StandardForm flipped{sf.b, sf.a, sf.c1, sf.c2};
  const CovarianceMatrix g = sf.to_cm(), gf = flipped.to_cm();

  MinimizeLResult out;
  out.limit = std::min(family_limit(sf.a, sf.b, sf.c1, sf.c2), family_limit(sf.b, sf.a, sf.c1, sf.c2));
  double best = std::numeric_limits<double>::infinity();
  for (double m1 : schedule) {
    if (!(m1 > 1)) throw Error(ErrorCode::InvalidArgument, "schedule entries must exceed 1", m1);
    // M3 <= M1 keeps gamma_M + i sigma >= 0 (its symplectic eigenvalue is M1 - M3 + 1).
    const double tmax = std::sqrt((m1 - 1) / (m1 + 1));
    double level = std::numeric_limits<double>::infinity();
    for (int orient = 0; orient < 2; ++orient) {
      const CovarianceMatrix& target = orient == 0 ? g : gf;
      auto f = [&](double t) { return l_ratio(target, boundary_family(m1, t)); };
      const auto [t, v] = scan_minimize(f, -tmax, tmax, 41);
      if (v < level) level = v;
      if (v < best) {
        best = v;
        const SixParamDetect d = boundary_family(m1, t);
        out.detect = orient == 0 ? d : d.swapped();
      }
    }
    out.schedule.push_back(level);
  }
  out.from_limit = out.limit < best;
  out.value = std::min(best, out.limit);
  return out;
}

}  // namespace cvw
