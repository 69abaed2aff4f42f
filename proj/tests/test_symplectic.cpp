#include <catch_amalgamated.hpp>

#include <cmath>
#include <functional>

#include "cvw/error.hpp"
#include "cvw/symplectic.hpp"
#include "support/oracles.hpp"

using namespace cvw;
using Catch::Matchers::WithinAbs;

namespace {

Matrix tmsv_matrix(double r) { return oracle::two_mode_squeezed_vacuum(r).to_matrix(); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected cvw::Error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("validation rejects malformed and unphysical matrices") {
  CHECK(code_of([] { validate_cm(Matrix::Identity(3, 3)); }) == ErrorCode::OddDimension);
  Matrix asym = Matrix::Identity(2, 2);
  asym(0, 1) = 0.5;
  CHECK(code_of([&] { validate_cm(asym); }) == ErrorCode::NotSymmetric);
  Matrix squeezed_too_far = Matrix::Identity(2, 2) * 0.5;
  CHECK(code_of([&] { validate_cm(squeezed_too_far); }) == ErrorCode::NotPhysical);
  try {
    validate_cm(squeezed_too_far);
  } catch (const Error& e) {
    CHECK_THAT(e.value(), WithinAbs(-0.5, 1e-12));
  }
  CHECK_NOTHROW(validate_cm(Matrix::Identity(4, 4)));
}

TEST_CASE("symplectic eigenvalues of reference states") {
  auto nu = symplectic_eigenvalues(validate_cm(Matrix::Identity(4, 4)));
  REQUIRE(nu.size() == 2);
  CHECK_THAT(nu[0], WithinAbs(1, 1e-12));
  CHECK_THAT(nu[1], WithinAbs(1, 1e-12));

  nu = symplectic_eigenvalues(validate_cm(3 * Matrix::Identity(2, 2)));
  REQUIRE(nu.size() == 1);
  CHECK_THAT(nu[0], WithinAbs(3, 1e-12));

  nu = symplectic_eigenvalues(validate_cm(tmsv_matrix(0.5)));
  CHECK_THAT(nu[0], WithinAbs(1, 1e-9));
  CHECK_THAT(nu[1], WithinAbs(1, 1e-9));
}

TEST_CASE("symplectic eigenvalues are invariant under random symplectics") {
  oracle::Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int modes = 1 + trial % 4;
    Matrix d = Matrix::Zero(2 * modes, 2 * modes);
    std::vector<double> want;
    for (int m = 0; m < modes; ++m) {
      const double v = oracle::uniform(rng, 1, 4);
      d(2 * m, 2 * m) = d(2 * m + 1, 2 * m + 1) = v;
      want.push_back(v);
    }
    std::sort(want.begin(), want.end(), std::greater<>());
    const Matrix s = oracle::random_symplectic(modes, rng);
    Matrix g = s * d * s.transpose();
    g = (g + g.transpose()) / 2;
    const auto nu = symplectic_eigenvalues(validate_cm(g));
    for (int m = 0; m < modes; ++m) CHECK_THAT(nu[m], WithinAbs(want[m], 1e-8));
  }
}

TEST_CASE("valid CMs have symplectic eigenvalues >= 1, pure ones exactly 1") {
  oracle::Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const int modes = 1 + trial % 3;
    for (double v : symplectic_eigenvalues(validate_cm(oracle::random_cm(modes, rng))))
      CHECK(v >= 1 - 1e-9);
    for (double v : symplectic_eigenvalues(validate_cm(oracle::random_pure_cm(modes, rng))))
      CHECK_THAT(v, WithinAbs(1, 1e-9));
  }
}

TEST_CASE("partial transpose") {
  const auto part = ModePartition::bipartite(1, 1);
  CHECK(partial_transpose(Matrix::Identity(4, 4), part).isApprox(Matrix::Identity(4, 4)));

  Matrix product = Matrix::Zero(4, 4);
  product.diagonal() << 2, 2, 3, 3;
  CHECK(partial_transpose(product, part).isApprox(product));

  // Pure entangled state: the smallest PT symplectic eigenvalue is e^{-2r}.
  const auto nu = symplectic_eigenvalues(partial_transpose(tmsv_matrix(1.0), part));
  CHECK_THAT(nu.back(), WithinAbs(std::exp(-2.0), 1e-9));

  oracle::Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix g = oracle::random_cm(3, rng);
    const auto p = ModePartition::bipartite(1, 2);
    CHECK((partial_transpose(partial_transpose(g, p), p) - g).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("standard form reduction") {
  const StandardForm given{2, 3, 1, 0.5};
  const StandardForm sf = standard_form(given.to_cm());
  CHECK_THAT(sf.a, WithinAbs(2, 1e-12));
  CHECK_THAT(sf.b, WithinAbs(3, 1e-12));
  CHECK_THAT(sf.c1, WithinAbs(1, 1e-12));
  CHECK_THAT(sf.c2, WithinAbs(0.5, 1e-12));

  Matrix product = Matrix::Zero(4, 4);
  product.diagonal() << 2, 2, 3, 3;
  const StandardForm p = standard_form(validate_cm(product));
  CHECK_THAT(p.c1, WithinAbs(0, 1e-12));
  CHECK_THAT(p.c2, WithinAbs(0, 1e-12));

  Matrix singular_block = Matrix::Zero(4, 4);
  singular_block.diagonal() << 0, 1, 1, 1;
  CHECK(code_of([&] { standard_form_reduction(singular_block); }) == ErrorCode::DegenerateBlock);
}

TEST_CASE("standard form is recovered after random local symplectics") {
  oracle::Rng rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    const StandardForm sf0 = oracle::random_standard_form(rng);
    if (sf0.c1 < std::abs(sf0.c2) + 1e-6) continue;  // degenerate c1 = |c2| is only defined up to a swap
    const Matrix s = oracle::random_local_symplectic(rng);
    Matrix g = s * sf0.to_matrix() * s.transpose();
    g = (g + g.transpose()) / 2;
    const StandardFormReduction red = standard_form_reduction(g);
    CHECK_THAT(red.form.a, WithinAbs(sf0.a, 1e-9));
    CHECK_THAT(red.form.b, WithinAbs(sf0.b, 1e-9));
    CHECK_THAT(red.form.c1, WithinAbs(sf0.c1, 1e-9));
    CHECK_THAT(red.form.c2, WithinAbs(sf0.c2, 1e-9));
    const Matrix mapped = red.local_symplectic * g * red.local_symplectic.transpose();
    CHECK((mapped - red.form.to_matrix()).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("standard form preserves the local symplectic invariants") {
  oracle::Rng rng(15);
  for (int trial = 0; trial < 200; ++trial) {
    const CovarianceMatrix g = validate_cm(oracle::random_cm(2, rng));
    const Matrix r = standard_form(g).to_matrix();
    const Matrix& m = g.matrix();
    CHECK_THAT(r.topLeftCorner(2, 2).determinant(), WithinAbs(m.topLeftCorner(2, 2).determinant(), 1e-9));
    CHECK_THAT(r.bottomRightCorner(2, 2).determinant(), WithinAbs(m.bottomRightCorner(2, 2).determinant(), 1e-9));
    CHECK_THAT(r.topRightCorner(2, 2).determinant(), WithinAbs(m.topRightCorner(2, 2).determinant(), 1e-9));
    CHECK_THAT(r.determinant(), WithinAbs(m.determinant(), 1e-9 * std::max(1.0, m.determinant())));
  }
}

TEST_CASE("complex covariance matrix") {
  const ComplexMatrix vac = to_complex_cm(Matrix::Identity(4, 4)).matrix();
  CHECK((vac - vacuum_ccm(2)).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(std::abs(vac(0, 2) - 1.0) < 1e-15);
  CHECK(std::abs(vac(0, 0)) < 1e-15);

  const double r = 0.4;
  Matrix sq(2, 2);
  sq << std::exp(2 * r), 0, 0, std::exp(-2 * r);
  const ComplexMatrix t = to_complex_cm(sq).matrix();
  CHECK(std::abs(t(0, 0) - (-std::sinh(2 * r))) < 1e-14);
  CHECK(std::abs(t(0, 1) - std::cosh(2 * r)) < 1e-14);

  oracle::Rng rng(16);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix g = oracle::random_cm(1 + trial % 3, rng);
    CHECK((from_complex_cm(to_complex_cm(g).matrix()) - g).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((to_complex_cm(g).to_real() - g).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("gaussian overlap") {
  CHECK_THAT(gaussian_overlap(Matrix::Identity(2, 2), Matrix::Identity(2, 2)), WithinAbs(1, 1e-15));
  CHECK_THAT(gaussian_overlap(Matrix::Identity(2, 2), 3 * Matrix::Identity(2, 2)), WithinAbs(0.5, 1e-15));
  const Matrix t = tmsv_matrix(0.3);
  CHECK_THAT(gaussian_overlap(t, t), WithinAbs(1, 1e-9));
  CHECK(code_of([] { gaussian_overlap(Matrix::Zero(2, 2), Matrix::Zero(2, 2)); }) == ErrorCode::SingularSum);

  // Overlap of a state with itself is its purity: 1 exactly when every nu_i = 1.
  oracle::Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix pure = oracle::random_pure_cm(2, rng);
    CHECK_THAT(gaussian_overlap(pure, pure), WithinAbs(1, 1e-9));
    const Matrix mixed = oracle::random_cm(2, rng, 3.0);
    const auto nu = symplectic_eigenvalues(mixed);
    const double purity = 1 / (nu[0] * nu[1]);
    CHECK_THAT(gaussian_overlap(mixed, mixed), WithinAbs(purity, 1e-9));
  }
}
