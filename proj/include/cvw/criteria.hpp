#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cvw/symplectic.hpp"

namespace cvw {

inline constexpr double kVerdictTolerance = 1e-12;

enum class Classification { Entangled, CriterionSatisfied };

const char* to_string(Classification c);

// margin >= 0 means the separability criterion is satisfied.
struct Verdict {
  double margin = 0;
  Classification classification = Classification::CriterionSatisfied;
  std::string criterion_id;

  static Verdict from_margin(std::string id, double margin);
  bool entangled() const { return classification == Classification::Entangled; }
};

// Two-mode standard form, any sign of c2.
Verdict simon_criterion(const StandardForm& sf);

// Symmetric two-mode state a = b; requires c1, c2 > 0.
Verdict symmetric_two_mode(double a, double c1, double c2);

// Standard form with c1 = c2 = c.
Verdict squeezed_thermal(double a, double b, double c);

// 2x2-mode state with A = diag(A,B,A,B), B = diag(C,D,C,D) and the E/F
// correlation pattern x1x3: E, x2x4: -E, p1p4: -F, p2p3: -F.
struct WernerWolf2x2Params {
  double A = 1, B = 1, C = 1, D = 1, E = 0, F = 0;
  Matrix to_matrix() const;
};

Verdict werner_wolf_2x2(const WernerWolf2x2Params& p);

// Does some x, y > 0 satisfy (A - 1/x)(C - 1/y) >= E^2 and (B - x)(D - y) >= F^2
// with non-negative factors? Search window x, y in [1e-3, 1e3].
struct PairSearch {
  bool found = false;
  double slack = 0;  // width of the feasible y-interval at the best x (negative: gap)
  double x = 0, y = 0;
};

PairSearch ww_pair_search(const WernerWolf2x2Params& p);
inline bool ww_pair_exists(const WernerWolf2x2Params& p) { return ww_pair_search(p).found; }

// gamma = gamma_x (+) gamma_p, diagonals a, b, off-diagonals c1 and -c2.
struct SymmetricMultimodeParams {
  int n = 2;
  double a = 1, b = 1, c1 = 0, c2 = 0;
  Matrix to_matrix() const;
};

Verdict multimode_symmetric_full_sep(const SymmetricMultimodeParams& p);

// GHZ-type symmetric state: gamma_x diagonal a, gamma_p diagonal a + (n-2)c,
// off-diagonals c and -c.
Matrix ghz_cm(double a, double c, int n);
Verdict ghz_full_sep(double a, double c, int n);

// Three-mode symmetric squeezed thermal state (b = a + c) biseparability.
double three_mode_threshold();   // 1/sqrt(5 + 2 sqrt 11)
double three_mode_large_c_gap(); // boundary value of a - c for c above the threshold
double three_mode_small_c_bound(double c);
double three_mode_large_c_bound(double c);
Verdict three_mode_biseparable(double a, double c);

struct BiseparabilityCertificate {
  double x = 1;
  double s = 0;
  // LHS - RHS of the four mixture inequalities; all >= 0 certifies biseparability.
  std::array<double, 4> residuals{};
};

BiseparabilityCertificate biseparability_certificate(double a, double c);

// (sqrt(ab) - c1)(sqrt(ab) - c2) - 1; requires c1, c2 > 0.
Verdict cauchy_schwarz_bound(const StandardForm& sf);

// gamma >= locals[0] (+) locals[1] (+) ...; each local CM must be pure (det 1 within 1e-6).
bool refined_ww_check(const Matrix& gamma, const std::vector<Matrix>& locals);
bool refined_ww_check(const CovarianceMatrix& gamma, const CovarianceMatrix& ga,
                      const CovarianceMatrix& gb);

// Pure product certificate gamma_A = diag(1/x, x), gamma_B = diag(y, 1/y).
struct ProductCertificate {
  double x = 1, y = 1;
  Matrix gamma_a() const;
  Matrix gamma_b() const;
};

std::optional<ProductCertificate> refined_ww_search(const StandardForm& sf);

}  // namespace cvw
