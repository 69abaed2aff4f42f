#include "cvw/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/tools/minima.hpp>

#include "cvw/error.hpp"

namespace cvw {

const char* to_string(Classification c) {
  return c == Classification::Entangled ? "entangled" : "criterion_satisfied";
}

Verdict Verdict::from_margin(std::string id, double margin) {
  Verdict v;
  v.margin = margin;
  v.classification = margin < -kVerdictTolerance ? Classification::Entangled
                                                 : Classification::CriterionSatisfied;
  v.criterion_id = std::move(id);
  return v;
}

Verdict simon_criterion(const StandardForm& sf) {
  validate_cm(sf.to_matrix());
  const double a = sf.a, b = sf.b, c1 = sf.c1, c2 = sf.c2;
  const double m = (a * b - c1 * c1) * (a * b - c2 * c2) - 2 * std::abs(c1 * c2) - a * a - b * b + 1;
  return Verdict::from_margin("simon", m);
}

Verdict symmetric_two_mode(double a, double c1, double c2) {
  if (!(c1 > 0 && c2 > 0))
    throw Error(ErrorCode::InvalidArgument, "symmetric_two_mode needs c1 > 0 and c2 > 0");
  validate_cm(StandardForm{a, a, c1, c2}.to_matrix());
  return Verdict::from_margin("symmetric_two_mode", (a - c1) * (a - c2) - 1);
}

Verdict squeezed_thermal(double a, double b, double c) {
  validate_cm(StandardForm{a, b, c, c}.to_matrix());
  return Verdict::from_margin("squeezed_thermal", (a - 1) * (b - 1) - c * c);
}

Matrix WernerWolf2x2Params::to_matrix() const {
  Matrix g = Matrix::Zero(8, 8);
  g.topLeftCorner(4, 4).diagonal() << A, B, A, B;
  g.bottomRightCorner(4, 4).diagonal() << C, D, C, D;
  Matrix c = Matrix::Zero(4, 4);
  c(0, 0) = E;
  c(1, 3) = -F;
  c(2, 2) = -E;
  c(3, 1) = -F;
  g.topRightCorner(4, 4) = c;
  g.bottomLeftCorner(4, 4) = c.transpose();
  return g;
}

Verdict werner_wolf_2x2(const WernerWolf2x2Params& p) {
  validate_cm(p.to_matrix());
  const double m = (p.A * p.C - p.E * p.E) * (p.B * p.D - p.F * p.F) - 2 * std::abs(p.E * p.F) -
                   p.C * p.D - p.A * p.B + 1;
  return Verdict::from_margin("werner_wolf_2x2", m);
}

namespace {

constexpr double kSearchLo = 1e-3;
constexpr double kSearchHi = 1e3;
constexpr int kSearchPoints = 600;
constexpr double kNoPair = -std::numeric_limits<double>::infinity();

struct YWindow {
  double lo = 0, hi = 0;
  bool valid = false;
};

// Feasible y-interval of the two product inequalities at fixed x.
YWindow y_window(const WernerWolf2x2Params& p, double x) {
  YWindow w;
  const double fx = p.A - 1 / x, fp = p.B - x;
  if (fx < 0 || fp < 0) return w;
  if (p.E == 0) {
    w.lo = 1 / p.C;
  } else {
    if (fx <= 0) return w;
    const double den = p.C - p.E * p.E / fx;
    if (den <= 0) return w;
    w.lo = 1 / den;
  }
  if (p.F == 0) {
    w.hi = p.D;
  } else {
    if (fp <= 0) return w;
    w.hi = p.D - p.F * p.F / fp;
  }
  w.lo = std::max(w.lo, kSearchLo);
  w.hi = std::min(w.hi, kSearchHi);
  w.valid = true;
  return w;
}

double window_slack(const WernerWolf2x2Params& p, double x) {
  const YWindow w = y_window(p, x);
  return w.valid ? w.hi - w.lo : kNoPair;
}

}  // namespace

PairSearch ww_pair_search(const WernerWolf2x2Params& p) {
  // The y-constraints are monotone in y, so for each x the feasible set is an
  // interval; existence reduces to a 1-D maximization of its width over x.
  std::vector<double> xs;
  xs.reserve(kSearchPoints + 2);
  for (int i = 0; i < kSearchPoints; ++i)
    xs.push_back(kSearchLo * std::pow(kSearchHi / kSearchLo, double(i) / (kSearchPoints - 1)));
  for (double edge : {1 / p.A, p.B})
    if (edge >= kSearchLo && edge <= kSearchHi) xs.push_back(edge);
  std::sort(xs.begin(), xs.end());

  std::size_t best = 0;
  double best_slack = kNoPair;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double s = window_slack(p, xs[i]);
    if (s > best_slack) {
      best_slack = s;
      best = i;
    }
  }

  PairSearch out;
  out.x = xs[best];
  out.slack = best_slack;
  if (best_slack > kNoPair) {
    const double lo = xs[best > 0 ? best - 1 : 0];
    const double hi = xs[std::min(best + 1, xs.size() - 1)];
    if (hi > lo) {
      auto neg = [&](double x) {
        const double s = window_slack(p, x);
        return s > kNoPair ? -s : std::numeric_limits<double>::max();
      };
      const auto r = boost::math::tools::brent_find_minima(neg, lo, hi, 52);
      if (-r.second > out.slack) {
        out.slack = -r.second;
        out.x = r.first;
      }
    }
  }
  out.found = out.slack >= -kVerdictTolerance;
  if (out.slack > kNoPair) {
    const YWindow w = y_window(p, out.x);
    out.y = out.found ? (w.hi >= w.lo ? 0.5 * (w.lo + w.hi) : w.lo) : w.lo;
  }
  return out;
}

Matrix SymmetricMultimodeParams::to_matrix() const {
  Matrix g = Matrix::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      g(2 * i, 2 * j) = i == j ? a : c1;
      g(2 * i + 1, 2 * j + 1) = i == j ? b : -c2;
    }
  return g;
}

Verdict multimode_symmetric_full_sep(const SymmetricMultimodeParams& p) {
  if (p.n < 2) throw Error(ErrorCode::InvalidArgument, "multimode criterion needs n >= 2");
  if (!(p.c1 > 0 && p.c2 > 0))
    throw Error(ErrorCode::InvalidArgument, "multimode criterion needs c1 > 0 and c2 > 0");
  validate_cm(p.to_matrix());
  return Verdict::from_margin("multimode_symmetric", (p.a - p.c1) * (p.b - (p.n - 1) * p.c2) - 1);
}

Matrix ghz_cm(double a, double c, int n) {
  SymmetricMultimodeParams p{n, a, a + (n - 2) * c, c, c};
  return p.to_matrix();
}

Verdict ghz_full_sep(double a, double c, int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "GHZ criterion needs n >= 2");
  validate_cm(ghz_cm(a, c, n));
  const double b = a + (n - 2) * c;
  return Verdict::from_margin("ghz", c > 0 ? a - c - 1 : b + c - 1);
}

double three_mode_threshold() { return 1 / std::sqrt(5 + 2 * std::sqrt(11.0)); }

double three_mode_large_c_gap() {
  const double r11 = std::sqrt(11.0);
  return (4 * std::sqrt(14 + 2 * r11) + std::sqrt(29 + 8 * r11) - 9) / (6 * std::sqrt(5 + 2 * r11));
}

double three_mode_small_c_bound(double c) {
  return 0.5 * std::sqrt(c * c + 4.0 / 9) + 2 * std::sqrt(c * c + 1.0 / 9) - 0.5 * c;
}

double three_mode_large_c_bound(double c) { return c + three_mode_large_c_gap(); }

Verdict three_mode_biseparable(double a, double c) {
  if (c < 0) throw Error(ErrorCode::NegativeC, "three-mode criterion is derived for c >= 0", c);
  const double bound = c >= three_mode_threshold() ? three_mode_large_c_bound(c) : three_mode_small_c_bound(c);
  return Verdict::from_margin("three_mode_biseparable", a - bound);
}

BiseparabilityCertificate biseparability_certificate(double a, double c) {
  if (c < 0) throw Error(ErrorCode::NegativeC, "three-mode certificate is derived for c >= 0", c);
  BiseparabilityCertificate cert;
  const double sh = c >= three_mode_threshold() ? std::sqrt(9 / (5 + 2 * std::sqrt(11.0))) : 3 * c;
  cert.s = 0.5 * std::asinh(sh);
  const double ch = std::sqrt(1 + sh * sh);
  // x - 1/x + sinh(2s) = 0, positive root
  cert.x = 0.5 * (-sh + std::sqrt(sh * sh + 4));
  const double x = cert.x, b = a + c;
  cert.residuals = {
      (a - c) - (x + 2 * ch - sh) / 3,
      (a + 2 * c) - (x + 2 * ch + 2 * sh) / 3,
      (b + c) - (1 / x + 2 * ch + sh) / 3,
      (b - 2 * c) - (1 / x + 2 * ch - 2 * sh) / 3,
  };
  return cert;
}

Verdict cauchy_schwarz_bound(const StandardForm& sf) {
  if (!(sf.c1 > 0 && sf.c2 > 0))
    throw Error(ErrorCode::InvalidArgument, "Cauchy-Schwarz bound needs c1 > 0 and c2 > 0");
  const double g = std::sqrt(sf.a * sf.b);
  return Verdict::from_margin("cauchy_schwarz", (g - sf.c1) * (g - sf.c2) - 1);
}

bool refined_ww_check(const Matrix& gamma, const std::vector<Matrix>& locals) {
  Eigen::Index dim = 0;
  for (const auto& l : locals) {
    if (l.rows() != l.cols() || l.rows() % 2 != 0)
      throw Error(ErrorCode::DimensionMismatch, "local CM must be square with even dimension");
    const double det = l.determinant();
    if (std::abs(det - 1) > 1e-6)
      throw Error(ErrorCode::ImpureLocalCM, "local CM determinant differs from 1", det);
    dim += l.rows();
  }
  if (dim != gamma.rows()) throw Error(ErrorCode::DimensionMismatch, "local CMs do not tile gamma");
  return min_eigenvalue(Matrix(gamma - direct_sum(locals))) >= -kPsdTolerance;
}

bool refined_ww_check(const CovarianceMatrix& gamma, const CovarianceMatrix& ga,
                      const CovarianceMatrix& gb) {
  return refined_ww_check(gamma.matrix(), {ga.matrix(), gb.matrix()});
}

Matrix ProductCertificate::gamma_a() const { return Eigen::Vector2d(1 / x, x).asDiagonal(); }
Matrix ProductCertificate::gamma_b() const { return Eigen::Vector2d(y, 1 / y).asDiagonal(); }

std::optional<ProductCertificate> refined_ww_search(const StandardForm& sf) {
  // gamma - diag(1/x, x) (+) diag(y, 1/y) >= 0 splits into the x-block
  // (a - 1/x)(b - y) >= c1^2 and the p-block (a - x)(b - 1/y) >= c2^2, i.e. the
  // pair problem with A = B = a, C = D = b, E = c1, F = c2 in the variable 1/y.
  const WernerWolf2x2Params p{sf.a, sf.a, sf.b, sf.b, sf.c1, sf.c2};
  const PairSearch s = ww_pair_search(p);
  if (!s.found) return std::nullopt;
  ProductCertificate cert{s.x, 1 / s.y};
  if (!refined_ww_check(sf.to_matrix(), {cert.gamma_a(), cert.gamma_b()})) return std::nullopt;
  return cert;
}

}  // namespace cvw
