#pragma once

#include <array>
#include <span>

namespace razavy {

/// Physical constants of Razavy's hyperbolic double well
///   V(x) = (hbar^2 / 2m) [ (xi^2/8) cosh 4x - 4 xi cosh 2x - xi^2/8 ].
struct PotentialParams {
  double hbar = 1.0;
  double mass = 1.0;
  double xi = 1.0;

  /// hbar^2 / 2m, the energy unit shared by V(x) and the closed-form levels.
  double energy_scale() const { return hbar * hbar / (2.0 * mass); }
};

/// Throws std::invalid_argument unless hbar, mass, xi are finite and positive.
void validate(const PotentialParams& params);

struct QuadratureConfig {
  double half_width = 5.0;   // integrate on [-L, L]
  double abs_tol = 1e-12;
  unsigned max_depth = 15;
};

/// The four closed-form levels of the isolated well together with the
/// normalization constants and the dipole element gamma = <phi0|x|phi1>.
struct SingleWellBasis {
  std::array<double, 4> eps{};
  std::array<double, 4> norm_consts{};
  double gamma = 0.0;
  PotentialParams params;

  double delta() const { return eps[1] - eps[0]; }
  double eps_sum() const { return eps[1] + eps[0]; }
};

double eval_potential(double x, const PotentialParams& params);

std::array<double, 4> single_well_eigenvalues(const PotentialParams& params);

/// Unnormalized phi_n(x) (A_n = 1). Throws std::invalid_argument for n > 3.
double raw_eigenfunction(int n, double x, const PotentialParams& params);

/// Normalized phi_n(x) = A_n * raw_eigenfunction(n, x).
double eval_eigenfunction(int n, double x, const SingleWellBasis& basis);

/// Computes A_0..A_3 and gamma by adaptive Gauss-Kronrod quadrature on
/// [-L, L]. Throws NumericError if the error estimate stays above abs_tol.
SingleWellBasis normalization_and_gamma(const PotentialParams& params,
                                        const QuadratureConfig& quad = {});

/// max_x |(-hbar^2/2m) phi_n'' + V phi_n - eps_n phi_n| over the sample points,
/// with a five-point central second derivative of step h.
double schrodinger_residual(int n, const SingleWellBasis& basis,
                            std::span<const double> xs, double h = 1e-4);

}  // namespace razavy
