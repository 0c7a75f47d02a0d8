#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "razavy/errors.hpp"
#include "razavy/potential.hpp"

using namespace razavy;

namespace {

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> xs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) xs[static_cast<std::size_t>(i)] = a + (b - a) * i / (n - 1);
  return xs;
}

double overlap(int m, int n, double power = 0.0) {
  const auto& b = fixtures::basis();
  return oracle::simpson(
      [&](double x) { return eval_eigenfunction(m, x, b) * std::pow(x, power) * eval_eigenfunction(n, x, b); },
      -6.0, 6.0, 24000);
}

}  // namespace

TEST_CASE("potential shape at the default parameters") {
  const PotentialParams p;
  CHECK(eval_potential(0.0, p) == doctest::Approx(-2.0).epsilon(1e-14));
  CHECK(std::abs(eval_potential(1.38433, p) - (-8.125)) < 1e-4);
  for (double x : {0.1, 0.7, 1.38433, 2.5}) {
    CHECK(eval_potential(x, p) == eval_potential(-x, p));
  }
  // 1.38433 is the minimum: V is larger on either side.
  CHECK(eval_potential(1.37, p) > eval_potential(1.38433, p));
  CHECK(eval_potential(1.40, p) > eval_potential(1.38433, p));
}

TEST_CASE("closed-form single-well levels") {
  const auto eps = single_well_eigenvalues(PotentialParams{});
  const double expected[] = {-4.73205, -4.64575, -1.26795, 0.645751};
  for (int n = 0; n < 4; ++n) CHECK(std::abs(eps[static_cast<std::size_t>(n)] - expected[n]) < 1e-5);
  CHECK(std::abs((eps[1] - eps[0]) - 0.0863) < 5e-5);
  CHECK(std::abs((eps[1] + eps[0]) - (-9.3778)) < 1e-4);
}

TEST_CASE("level ordering holds across xi in (0, 4]") {
  for (int k = 1; k <= 400; ++k) {
    PotentialParams p;
    p.xi = 0.01 * k;
    const auto eps = single_well_eigenvalues(p);
    CHECK(eps[0] < eps[1]);
    CHECK(eps[1] < eps[2]);
    CHECK(eps[2] < eps[3]);
  }
}

TEST_CASE("two-state truncation is justified at the defaults") {
  const auto& b = fixtures::basis();
  CHECK((b.eps[1] - b.eps[0]) / (b.eps[2] - b.eps[1]) < 0.03);
}

TEST_CASE("eigenfunction parity") {
  const auto& b = fixtures::basis();
  CHECK(eval_eigenfunction(1, 0.0, b) == 0.0);
  CHECK(eval_eigenfunction(3, 0.0, b) == 0.0);
  for (double x : {0.3, 1.23, 2.0}) {
    CHECK(eval_eigenfunction(0, x, b) == eval_eigenfunction(0, -x, b));
    CHECK(eval_eigenfunction(1, x, b) == -eval_eigenfunction(1, -x, b));
    CHECK(eval_eigenfunction(2, x, b) == eval_eigenfunction(2, -x, b));
    CHECK(eval_eigenfunction(3, x, b) == -eval_eigenfunction(3, -x, b));
  }
  CHECK_THROWS_AS(raw_eigenfunction(4, 0.0, PotentialParams{}), std::invalid_argument);
  CHECK_THROWS_AS(eval_eigenfunction(-1, 0.0, b), std::invalid_argument);
}

TEST_CASE("normalization and dipole element") {
  const auto& b = fixtures::basis();
  CHECK(std::abs(b.gamma - 1.13823) < 1e-5);
  CHECK(b.gamma > 0.0);
  for (double a : b.norm_consts) CHECK(a > 0.0);

  // Independent Simpson quadrature on a wider window.
  for (int n = 0; n < 4; ++n) CHECK(std::abs(overlap(n, n) - 1.0) < 1e-10);
  CHECK(std::abs(overlap(0, 1)) < 1e-10);
  CHECK(std::abs(overlap(0, 0, 1.0)) < 1e-10);
  CHECK(std::abs(overlap(0, 1, 1.0) - b.gamma) < 1e-10);
}

TEST_CASE("lower doublet is orthonormal") {
  for (int m = 0; m < 2; ++m) {
    for (int n = 0; n < 2; ++n) {
      CHECK(std::abs(overlap(m, n) - (m == n ? 1.0 : 0.0)) < 1e-8);
    }
  }
}

TEST_CASE("gamma does not depend on the quadrature window beyond L = 5") {
  const double reference = fixtures::basis().gamma;
  for (double L : {5.5, 6.0, 8.0}) {
    QuadratureConfig q;
    q.half_width = L;
    CHECK(std::abs(normalization_and_gamma(PotentialParams{}, q).gamma - reference) < 1e-12);
  }
}

TEST_CASE("quadrature failure and invalid parameters are reported") {
  QuadratureConfig q;
  q.abs_tol = 1e-300;
  q.max_depth = 2;
  CHECK_THROWS_AS(normalization_and_gamma(PotentialParams{}, q), NumericError);

  PotentialParams bad;
  bad.xi = 0.0;
  CHECK_THROWS_AS(normalization_and_gamma(bad), std::invalid_argument);
  bad = PotentialParams{};
  bad.mass = -1.0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
}

TEST_CASE("closed forms satisfy the Schroedinger equation") {
  const auto& b = fixtures::basis();
  const auto xs = linspace(-3.0, 3.0, 241);
  for (int n = 0; n < 4; ++n) {
    CHECK(schrodinger_residual(n, b, xs) < 1e-5);
  }
  // A wrong level energy is detected.
  SingleWellBasis shifted = b;
  shifted.eps[0] += 1e-3;
  CHECK(schrodinger_residual(0, shifted, xs) > 1e-4);
}

TEST_CASE("finite-difference step underflow") {
  const auto& b = fixtures::basis();
  const std::vector<double> xs = {1.0};
  CHECK_THROWS_AS(schrodinger_residual(0, b, xs, 0.0), NumericError);
  CHECK_THROWS_AS(schrodinger_residual(0, b, xs, 1e-300), NumericError);
}

TEST_CASE("non-default units scale the levels") {
  PotentialParams p;
  p.hbar = 2.0;
  const auto scaled = single_well_eigenvalues(p);
  const auto base = single_well_eigenvalues(PotentialParams{});
  for (std::size_t n = 0; n < 4; ++n) CHECK(scaled[n] == doctest::Approx(4.0 * base[n]));
  const auto b = normalization_and_gamma(p);
  const std::vector<double> xs = {-1.0, 0.2, 1.5};
  CHECK(schrodinger_residual(1, b, xs) < 1e-5);
}
