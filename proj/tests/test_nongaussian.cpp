#include <catch_amalgamated.hpp>

#include <cmath>

#include "cvw/error.hpp"
#include "cvw/nongaussian.hpp"
#include "support/oracles.hpp"

using namespace cvw;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

Vector vec1(double v) { return Vector::Constant(1, v); }

struct FockGaussian {
  ComplexMatrix rho;
  Matrix cm;
};

FockGaussian single_mode(oracle::Rng& rng, int dim) {
  const double nbar = oracle::uniform(rng, 0, 0.6), r = oracle::uniform(rng, -0.5, 0.5);
  const double theta = oracle::uniform(rng, 0, M_PI);
  ComplexMatrix rho = oracle::single_mode_gaussian(120, dim, nbar, r, theta);
  return {rho, oracle::fock_cm(rho, 1)};
}

FockGaussian two_mode(oracle::Rng& rng, int dim) {
  auto local = [&] {
    return oracle::single_mode_gaussian(120, dim, oracle::uniform(rng, 0, 0.25), oracle::uniform(rng, -0.3, 0.3),
                                        oracle::uniform(rng, 0, M_PI));
  };
  const ComplexMatrix r1 = local(), r2 = local();
  ComplexMatrix rho = oracle::two_mode_gaussian(r1, r2, oracle::uniform(rng, 0, M_PI));
  return {rho, oracle::fock_cm(rho, 2)};
}

}  // namespace

TEST_CASE("Q characteristic function at the origin") {
  const Matrix vac = Matrix::Identity(2, 2);
  CHECK(std::abs(q_char_zero(vac, vec1(0), vec1(0), vec1(0), vec1(0)) - 1.0) < 1e-15);
  // Vacuum kernel with only eps: the (eps, 0) block of the plus matrix is zero.
  CHECK(std::abs(q_char_zero(vac, vec1(0.7), vec1(0), vec1(0), vec1(0)) - 1.0) < 1e-15);

  // Squeezed kernel diag(e^{2r}, e^{-2r}): <exp(eps a^dag)> = exp(eps^2 sinh(2r) / 4).
  const double r = 0.35, t = 0.6;
  Matrix sq(2, 2);
  sq << std::exp(2 * r), 0, 0, std::exp(-2 * r);
  CHECK(std::abs(q_char_zero(sq, vec1(t), vec1(0), vec1(0), vec1(0)) - std::exp(t * t * std::sinh(2 * r) / 4)) < 1e-14);

  const QEvaluation zero = q_evaluate(sq, 3 * Matrix::Identity(2, 2), vec1(0), vec1(0), vec1(0), vec1(0));
  CHECK(std::abs(zero.chi - 1.0) < 1e-15);
  CHECK(std::abs(zero.f) < 1e-15);
}

TEST_CASE("Q characteristic function matches the Fock-basis trace of Q") {
  // Tr[e^{eps a^dag} e^{xi a} rho e^{eta a^dag} e^{zeta a}].
  oracle::Rng rng(51);
  const int dim = 60;
  const ComplexMatrix a = oracle::annihilation(dim), ad = a.adjoint();
  for (int trial = 0; trial < 8; ++trial) {
    const FockGaussian g = single_mode(rng, dim);
    const double e = oracle::uniform(rng, -0.5, 0.5), x = oracle::uniform(rng, -0.5, 0.5);
    const double h = oracle::uniform(rng, -0.5, 0.5), z = oracle::uniform(rng, -0.5, 0.5);
    const ComplexMatrix q = oracle::expm(e * ad) * oracle::expm(x * a) * g.rho * oracle::expm(h * ad) * oracle::expm(z * a);
    const complex want = q.trace() / g.rho.trace();
    CHECK(std::abs(q_char_zero(g.cm, vec1(e), vec1(x), vec1(h), vec1(z)) - want) < 1e-8);
  }
}

TEST_CASE("trace without photon operations is the Gaussian overlap") {
  oracle::Rng rng(52);
  for (int trial = 0; trial < 10; ++trial) {
    const CovarianceMatrix g = validate_cm(oracle::random_cm(2, rng));
    const Matrix m = oracle::random_cm(2, rng);
    const NgpasgSpec s = NgpasgSpec::make(g, {0, 0}, {0, 0});
    CHECK_THAT(ngpasg_trace_finite(s, m), WithinRel(gaussian_overlap(g.matrix(), m), 1e-12));
    CHECK(ngpasg_trace_limit(s, m) == gaussian_overlap(g.matrix(), m));
    CHECK(ngpasg_trace_limit(NgpasgSpec::make(g, {1, 1}, {0, 0}), m) == ngpasg_trace_limit(s, m));
  }
}

TEST_CASE("photon counts are validated") {
  const CovarianceMatrix g = validate_cm(Matrix::Identity(2, 2));
  CHECK_THROWS_AS(NgpasgSpec::make(g, {-1}, {0}), Error);
  CHECK_THROWS_AS(NgpasgSpec::make(g, {1, 1}, {0}), Error);
  try {
    ngpasg_trace_finite(NgpasgSpec::make(g, {3}, {0}), Matrix::Identity(2, 2));
    FAIL("expected UnsupportedOrder");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedOrder);
  }
}

TEST_CASE("single-mode traces match Fock-basis brute force") {
  oracle::Rng rng(53);
  for (int trial = 0; trial < 4; ++trial) {
    const FockGaussian g = single_mode(rng, 40), m = single_mode(rng, 40);
    for (int k = 0; k <= 2; ++k)
      for (int s = 0; s <= 2; ++s) {
        const NgpasgSpec spec{g.cm, {k}, {s}};
        const double want = oracle::photon_modified_trace(g.rho, m.rho, 1, {k}, {s});
        CHECK_THAT(ngpasg_trace_finite(spec, m.cm), WithinAbs(want, 1e-6));
      }
  }
}

TEST_CASE("two-mode traces match Fock-basis brute force") {
  oracle::Rng rng(54);
  const int dim = 20;
  for (int trial = 0; trial < 2; ++trial) {
    const FockGaussian g = two_mode(rng, dim), m = two_mode(rng, dim);
    for (const auto& [adds, subs] : std::vector<std::pair<std::vector<int>, std::vector<int>>>{
             {{1, 0}, {0, 0}}, {{1, 1}, {0, 0}}, {{0, 0}, {1, 1}}, {{2, 0}, {0, 1}}, {{1, 2}, {1, 0}}}) {
      const NgpasgSpec spec{g.cm, adds, subs};
      const double want = oracle::photon_modified_trace(g.rho, m.rho, 2, adds, subs);
      CHECK_THAT(ngpasg_trace_finite(spec, m.cm), WithinAbs(want, 1e-6));
    }
  }
}

TEST_CASE("finite traces approach the limit as the detect CM grows") {
  oracle::Rng rng(55);
  for (int trial = 0; trial < 20; ++trial) {
    const CovarianceMatrix g = validate_cm(oracle::random_cm(2, rng, 2.0, 0.5));
    const Matrix m = oracle::random_cm(2, rng, 2.0, 0.5);
    const NgpasgSpec s = NgpasgSpec::make(g, {1, 1}, {0, 0});
    double prev = std::numeric_limits<double>::infinity();
    for (double lambda : {10.0, 1e2, 1e3, 1e4}) {
      const double fin = ngpasg_trace_finite(s, lambda * m), lim = ngpasg_trace_limit(s, lambda * m);
      const double gap = std::abs(fin - lim) / lim;
      CHECK(gap < prev);
      prev = gap;
    }
  }
}

TEST_CASE("photon-added criterion") {
  // Entangled iff tanh r > N / (N + 1), for any photon counts.
  for (double n : {0.0, 0.5, 1.0, 2.0}) {
    const double rb = fig2a_boundary(n);
    for (double r : {rb * 0.8, rb + 0.05, rb * 1.5 + 0.1}) {
      const CovarianceMatrix g = validate_cm(symmetric_squeezed_thermal(n, r));
      const bool want = std::tanh(r) > n / (n + 1) + 1e-12;
      for (int k = 0; k <= 2; ++k)
        for (int m = 0; m <= 2; ++m)
          CHECK(photon_added_criterion(NgpasgSpec::make(g, {k, k}, {m, 0})).entangled() == want);
    }
  }
  const double rb = fig2a_boundary(1.0);
  const CovarianceMatrix edge = validate_cm(symmetric_squeezed_thermal(1.0, rb));
  const Verdict one = photon_added_criterion(NgpasgSpec::make(edge, {1, 1}, {0, 0}));
  const Verdict two = photon_added_criterion(NgpasgSpec::make(edge, {2, 2}, {0, 0}));
  CHECK_THAT(one.margin, WithinAbs(0, 1e-9));
  CHECK(one.classification == two.classification);
  CHECK(one.margin == two.margin);

  // Irregular kernels go through the ratio minimization, still count-invariant.
  oracle::Rng rng(56);
  for (int trial = 0; trial < 5; ++trial) {
    const CovarianceMatrix g = validate_cm(oracle::random_cm(2, rng));
    const Verdict base = photon_added_criterion(NgpasgSpec::make(g, {0, 0}, {0, 0}));
    CHECK(photon_added_criterion(NgpasgSpec::make(g, {2, 1}, {1, 0})).margin == base.margin);
  }
}

TEST_CASE("squeezing threshold of the photon-added kernel") {
  CHECK(fig2a_boundary(0) == 0);
  CHECK_THAT(fig2a_boundary(1), WithinAbs(0.549306, 1e-6));
  double prev = -1;
  for (double n = 0; n < 5; n += 0.25) {
    CHECK(fig2a_boundary(n) > prev);
    prev = fig2a_boundary(n);
  }
}
