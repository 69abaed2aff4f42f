#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "cvw/witness.hpp"

namespace cvw {

struct BetaFock {
  ComplexMatrix beta;       // (s3 (x) I)(g~/2 + s1 (x) I / 2)^{-1}(s3 (x) I)
  ComplexMatrix generator;  // s1 (x) I + beta, variables (t1, t2, t1', t2')
  double sqrt_det = 0;      // sqrt(det beta)
};

// Pre-squeezes gamma_M by diag(sqrt x, 1/sqrt x, sqrt y, 1/sqrt y) and builds
// the Fock generating matrix. Throws SingularMatrix.
BetaFock beta_fock(const SixParamDetect& d, double x, double y);

// The pre-squeezed generating matrix at a stationary (x, y) in closed form.
struct GeneratingCoeffs {
  std::array<double, 6> k{};  // K1..K6
  double n1 = 0, n2 = 0, n3 = 0, n4 = 0;
  double sqrt_det_beta = 0;
  double x = 1, y = 1;

  // [[0, N1, N2, N3], [N1, 0, N3, N4], [N2, N3, 0, N1], [N3, N4, N1, 0]]
  Matrix generator() const;
};

// Uses the (x, y) minimizer from lambda_product_vacuum.
GeneratingCoeffs generating_coeffs(const SixParamDetect& d);
// Throws StationarityViolated when the diagonal of T exceeds 1e-6.
GeneratingCoeffs generating_coeffs(const SixParamDetect& d, double x, double y);

// Truncated matrix elements M_{k1,k2;m1,m2} of the pre-squeezed detect operator.
class FockOperator {
 public:
  FockOperator(int cutoff, std::vector<complex> elements, double sqrt_det_beta, SixParamDetect detect,
               double x, double y);

  int cutoff() const { return d_; }
  double sqrt_det_beta() const { return sqrt_det_beta_; }
  const SixParamDetect& detect() const { return detect_; }
  double x() const { return x_; }
  double y() const { return y_; }

  const complex& operator()(int k1, int k2, int m1, int m2) const {
    return e_[((static_cast<std::size_t>(k1) * d_ + k2) * d_ + m1) * d_ + m2];
  }

 private:
  int d_;
  std::vector<complex> e_;
  double sqrt_det_beta_;
  SixParamDetect detect_;
  double x_, y_;
};

// Elements at the optimal pre-squeeze (from lambda_product_vacuum), or at an explicit (x, y).
FockOperator fock_elements(const SixParamDetect& d, int cutoff);
FockOperator fock_elements(const SixParamDetect& d, int cutoff, double x, double y);

class ProductStateVec {
 public:
  // Throws InvalidArgument unless both vectors are unit within 1e-12.
  ProductStateVec(ComplexVector a, ComplexVector b);
  static ProductStateVec normalized(ComplexVector a, ComplexVector b);
  static ProductStateVec vacuum(int cutoff);

  const ComplexVector& a() const { return a_; }
  const ComplexVector& b() const { return b_; }

 private:
  ComplexVector a_, b_;
};

double mean_photon(const ComplexVector& v);

// Six-index generating-function sum; each index runs below `truncation`.
double m0_eval(const GeneratingCoeffs& g, const ProductStateVec& psi, int truncation);

// <psi1 psi2| M |psi1 psi2> by direct tensor contraction.
complex expectation(const FockOperator& m, const ProductStateVec& psi);

// Contract mode 2 with (conj(b), b): result indexed (k1, m1). And the mirror for mode 1.
ComplexMatrix conditional_matrix(const FockOperator& m, const ComplexVector& b);
ComplexMatrix conditional_matrix_mode2(const FockOperator& m, const ComplexVector& a);

inline constexpr double kConvergedM0 = 0.99999;
inline constexpr int kDefaultMaxRounds = 100;

struct AlternationResult {
  double m0 = 0;
  ComplexVector psi1, psi2;
  int rounds = 0;
  bool converged = false;
  std::vector<double> m0_trace;      // after each round
  std::vector<double> photon_trace;  // average of both modes' mean photon number after each round
};

// Block-coordinate ascent over product states from a random start psi1 = psi2.
// Non-convergence is reported through `converged`, never thrown.
AlternationResult alternate_maximize(const FockOperator& m, std::uint64_t seed,
                                     int max_rounds = kDefaultMaxRounds);

// Regularization added to R R^T before projecting onto the detect pattern.
inline constexpr double kDetectRegularization = 0.01;

SixParamDetect random_detect_operator(std::uint64_t seed);

// Complex normal entries, normalized.
ComplexVector random_unit_vector(int dim, std::uint64_t seed);

// Independent per-sample stream seed derived from (master, index).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

struct SweepRow {
  std::uint64_t seed = 0;
  double avg_photon = 0;
  double m0 = 0;
  int rounds = 0;
  bool converged = false;
  SixParamDetect detect;
};

inline constexpr int kDefaultCutoff = 6;

// One alternating run per sample; each row is the run's final product state.
std::vector<SweepRow> sweep_fig1(int samples, int cutoff, std::uint64_t seed);

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);
// Rows whose M0 exceeds 1 + 1e-6 (vacuum-optimality counterexamples).
void write_failures_csv(std::ostream& os, const std::vector<SweepRow>& rows);

}  // namespace cvw
