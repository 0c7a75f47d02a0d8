#include "razavy/potential.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "razavy/errors.hpp"

namespace razavy {

namespace {

struct Radicals {
  double minus;  // sqrt(4 - 2 xi + xi^2), even levels
  double plus;   // sqrt(4 + 2 xi + xi^2), odd levels
};

Radicals radicals(double xi) {
  return {std::sqrt(4.0 - 2.0 * xi + xi * xi), std::sqrt(4.0 + 2.0 * xi + xi * xi)};
}

// The error estimate is compared against abs_tol * |value| when relative is
// set, which is the absolute error of the integral after normalization.
template <typename F>
double integrate(F&& f, const QuadratureConfig& quad, bool relative, const char* what) {
  using boost::math::quadrature::gauss_kronrod;
  double error = 0.0;
  const double value = gauss_kronrod<double, 61>::integrate(
      f, -quad.half_width, quad.half_width, quad.max_depth, quad.abs_tol * 1e-2, &error);
  const double scale = relative ? std::abs(value) : 1.0;
  if (!std::isfinite(value) || error > quad.abs_tol * scale) {
    throw NumericError(std::string("quadrature for ") + what +
                       " did not reach tolerance (error estimate " +
                       std::to_string(error) + ")");
  }
  return value;
}

}  // namespace

void validate(const PotentialParams& params) {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(params.hbar) || !positive(params.mass) || !positive(params.xi)) {
    throw std::invalid_argument("hbar, mass and xi must be finite and positive");
  }
}

double eval_potential(double x, const PotentialParams& params) {
  const double xi = params.xi;
  return params.energy_scale() *
         (xi * xi / 8.0 * std::cosh(4.0 * x) - 4.0 * xi * std::cosh(2.0 * x) - xi * xi / 8.0);
}

std::array<double, 4> single_well_eigenvalues(const PotentialParams& params) {
  const double xi = params.xi;
  const auto r = radicals(xi);
  const double s = params.energy_scale();
  return {s * (-xi - 5.0 - 2.0 * r.minus), s * (xi - 5.0 - 2.0 * r.plus),
          s * (-xi - 5.0 + 2.0 * r.minus), s * (xi - 5.0 + 2.0 * r.plus)};
}

double raw_eigenfunction(int n, double x, const PotentialParams& params) {
  const double xi = params.xi;
  const auto r = radicals(xi);
  const double envelope = std::exp(-xi * std::cosh(2.0 * x) / 4.0);
  switch (n) {
    case 0:
      return envelope * (3.0 * xi * std::cosh(x) + (4.0 - xi + 2.0 * r.minus) * std::cosh(3.0 * x));
    case 1:
      return envelope * (3.0 * xi * std::sinh(x) + (4.0 + xi + 2.0 * r.plus) * std::sinh(3.0 * x));
    case 2:
      return envelope * (3.0 * xi * std::cosh(x) + (4.0 - xi - 2.0 * r.minus) * std::cosh(3.0 * x));
    case 3:
      return envelope * (3.0 * xi * std::sinh(x) + (4.0 + xi - 2.0 * r.plus) * std::sinh(3.0 * x));
    default:
      throw std::invalid_argument("single-well level index must be 0..3, got " + std::to_string(n));
  }
}

double eval_eigenfunction(int n, double x, const SingleWellBasis& basis) {
  const double raw = raw_eigenfunction(n, x, basis.params);
  return basis.norm_consts[static_cast<std::size_t>(n)] * raw;
}

SingleWellBasis normalization_and_gamma(const PotentialParams& params,
                                        const QuadratureConfig& quad) {
  validate(params);
  if (!(quad.half_width > 0.0) || !(quad.abs_tol > 0.0)) {
    throw std::invalid_argument("quadrature window and tolerance must be positive");
  }

  SingleWellBasis basis;
  basis.params = params;
  basis.eps = single_well_eigenvalues(params);

  for (int n = 0; n < 4; ++n) {
    auto sq = [&](double x) {
      const double v = raw_eigenfunction(n, x, params);
      return v * v;
    };
    const double norm_sq = integrate(sq, quad, true, "normalization");
    basis.norm_consts[static_cast<std::size_t>(n)] = 1.0 / std::sqrt(norm_sq);
  }

  auto dipole = [&](double x) {
    return eval_eigenfunction(0, x, basis) * x * eval_eigenfunction(1, x, basis);
  };
  basis.gamma = integrate(dipole, quad, false, "dipole element");
  return basis;
}

double schrodinger_residual(int n, const SingleWellBasis& basis, std::span<const double> xs,
                            double h) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw NumericError("finite-difference step must be positive");
  }
  const double eps_n = basis.eps.at(static_cast<std::size_t>(n));
  const double kinetic = basis.params.energy_scale();
  double worst = 0.0;
  for (double x : xs) {
    if (x + h == x || x - h == x) {
      throw NumericError("finite-difference step underflows at x = " + std::to_string(x));
    }
    auto phi = [&](double y) { return eval_eigenfunction(n, y, basis); };
    const double second = (-phi(x + 2 * h) + 16 * phi(x + h) - 30 * phi(x) + 16 * phi(x - h) -
                           phi(x - 2 * h)) /
                          (12 * h * h);
    const double residual = -kinetic * second + (eval_potential(x, basis.params) - eps_n) * phi(x);
    worst = std::max(worst, std::abs(residual));
  }
  return worst;
}

}  // namespace razavy
