#pragma once

#include <array>
#include <functional>
#include <vector>

#include "razavy/analytic.hpp"
#include "razavy/coupled.hpp"
#include "razavy/dynamics.hpp"

namespace razavy {

struct Positions {
  double x1 = 0.0;
  double x2 = 0.0;
  double x_sum = 0.0;
};

/// <x1>, <x2> from the Phi-basis position matrices; x_sum = <x1> + <x2>.
Positions expectation_positions(const AmplitudeState& state, const CoupledSystem& sys);

/// <x1 + x2> of an RWA solution from its three-frequency form
/// (components at w and w +- Omega). Requires a2 = a3 = 0.
double rwa_expectation(const RwaSolution& sol, const CoupledSystem& sys, double t);

/// Gamma(t) = |<Psi(0)|Psi(t)>|.
double correlation(const AmplitudeState& state, const InitialState& initial,
                   const CoupledSystem& sys);

/// Concurrence from the Phi-basis amplitudes directly.
double concurrence(const AmplitudeState& state, const CoupledSystem& sys);

/// c_kl of Psi = sum c_kl |k l>, up to the global phase exp(-i E_0 t / hbar).
/// Order: c00, c01, c10, c11.
std::array<complex, 4> product_coefficients(const AmplitudeState& state,
                                            const CoupledSystem& sys);

/// C = 2 |c00 c11 - c01 c10|.
double concurrence_from_coefficients(const std::array<complex, 4>& c);

/// Closed multi-frequency forms of Gamma and C for an RWA solution.
/// Both require a2 = a3 = 0.
double rwa_correlation(const RwaSolution& sol, const CoupledSystem& sys, double t);
double rwa_concurrence(const RwaSolution& sol, const CoupledSystem& sys, double t);

struct GridSpec {
  int points = 201;      // per axis
  double extent = 3.0;   // axes span [-extent, extent]
  double norm_tolerance = 1e-6;
};

/// |Psi(x1, x2, t)|^2 on a uniform square grid, row-major with x1 outer.
struct DensityGrid {
  double t = 0.0;
  std::vector<double> x1_axis;
  std::vector<double> x2_axis;
  std::vector<double> values;
  double norm_check = 0.0;  // Riemann sum of values * dx1 * dx2

  double at(std::size_t i1, std::size_t i2) const { return values[i1 * x2_axis.size() + i2]; }
};

/// Throws NumericError when the grid normalization misses 1 by more than the
/// configured tolerance (grid too coarse or too narrow).
DensityGrid density_grid(const AmplitudeState& state, const CoupledSystem& sys,
                         const GridSpec& spec = {});

/// <x_well> by two-dimensional quadrature of Psi* x Psi on the grid.
double grid_oracle_expectation(const AmplitudeState& state, const CoupledSystem& sys, int well,
                               const GridSpec& spec = {});

struct ObservableSeries {
  std::vector<double> times;
  std::vector<std::array<double, 4>> populations;
  std::vector<double> x1, x2, x_sum;
  std::vector<double> corr;
  std::vector<double> conc;
};

ObservableSeries compute_series(const std::vector<AmplitudeState>& states,
                                const InitialState& initial, const CoupledSystem& sys);

/// Trapezoidal mean of f over [0, T'], where T' is the largest whole number
/// of periods not exceeding t_end. The sample spacing is at most max_step.
double time_average(const std::function<double(double)>& f, double t_end, double period,
                    double max_step);

}  // namespace razavy
