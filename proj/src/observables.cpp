#include "razavy/observables.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "razavy/errors.hpp"

namespace razavy {

namespace {

complex phase(double angle) { return {std::cos(angle), std::sin(angle)}; }

// Schroedinger-picture amplitudes a_nu exp(-i Delta_{nu 0} t); the common
// factor exp(-i E_0 t / hbar) is dropped.
Amplitudes rotated(const AmplitudeState& state, const CoupledSystem& sys) {
  Amplitudes b;
  for (int nu = 0; nu < 4; ++nu) {
    b[static_cast<std::size_t>(nu)] =
        state.a[static_cast<std::size_t>(nu)] * phase(-sys.gap(nu, 0) * state.t);
  }
  return b;
}

double bilinear(const Amplitudes& b, const Matrix4& m) {
  double v = 0.0;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    for (std::size_t nu = 0; nu < 4; ++nu) {
      const double e = m(static_cast<Eigen::Index>(mu), static_cast<Eigen::Index>(nu));
      if (e != 0.0) v += e * std::real(std::conj(b[mu]) * b[nu]);
    }
  }
  return v;
}

std::vector<double> axis(const GridSpec& spec) {
  if (spec.points < 2 || !(spec.extent > 0.0)) {
    throw std::invalid_argument("grid needs at least two points per axis and positive extent");
  }
  std::vector<double> xs(static_cast<std::size_t>(spec.points));
  const double dx = 2.0 * spec.extent / (spec.points - 1);
  for (int i = 0; i < spec.points; ++i) xs[static_cast<std::size_t>(i)] = -spec.extent + i * dx;
  return xs;
}

// Psi(x1, x2) on the grid, row-major x1 outer, global phase dropped.
std::vector<complex> wavefunction(const AmplitudeState& state, const CoupledSystem& sys,
                                  const std::vector<double>& xs) {
  const std::size_t n = xs.size();
  std::vector<double> phi0(n), phi1(n);
  for (std::size_t i = 0; i < n; ++i) {
    phi0[i] = eval_eigenfunction(0, xs[i], sys.basis);
    phi1[i] = eval_eigenfunction(1, xs[i], sys.basis);
  }
  // Product-basis coefficients c_kl, then Psi = sum c_kl phi_k(x1) phi_l(x2).
  const auto c = product_coefficients(state, sys);
  std::vector<complex> psi(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      psi[i * n + j] = c[0] * phi0[i] * phi0[j] + c[1] * phi0[i] * phi1[j] +
                       c[2] * phi1[i] * phi0[j] + c[3] * phi1[i] * phi1[j];
    }
  }
  return psi;
}

}  // namespace

Positions expectation_positions(const AmplitudeState& state, const CoupledSystem& sys) {
  const auto b = rotated(state, sys);
  Positions p;
  p.x1 = bilinear(b, position_matrix_eigen_basis(sys, 1));
  p.x2 = bilinear(b, position_matrix_eigen_basis(sys, 2));
  p.x_sum = p.x1 + p.x2;
  return p;
}

double rwa_expectation(const RwaSolution& sol, const CoupledSystem& sys, double t) {
  const double w = sol.omega;
  const double big = sol.rabi;
  const complex z = (std::conj(sol.r0) * sol.s1 + std::conj(sol.s0) * sol.r1) * phase(-w * t) +
                    std::conj(sol.r0) * sol.r1 * phase(-(w - big) * t) +
                    std::conj(sol.s0) * sol.s1 * phase(-(w + big) * t);
  return 2.0 * sys.alpha * std::real(z);
}

double correlation(const AmplitudeState& state, const InitialState& initial,
                   const CoupledSystem& sys) {
  const auto& a0 = initial.amplitudes();
  complex overlap = std::conj(a0[0]) * state.a[0];
  for (int nu = 1; nu < 4; ++nu) {
    const auto k = static_cast<std::size_t>(nu);
    overlap += std::conj(a0[k]) * state.a[k] * phase(-sys.gap(nu, 0) * state.t);
  }
  return std::min(1.0, std::abs(overlap));
}

double concurrence(const AmplitudeState& state, const CoupledSystem& sys) {
  const auto& a = state.a;
  const double t = state.t;
  const double s2 = std::sin(2.0 * sys.theta);
  const double c2 = std::cos(2.0 * sys.theta);
  const complex e30 = phase(-sys.gap(3, 0) * t);
  const complex e10 = phase(-sys.gap(1, 0) * t);
  const complex e20 = phase(-sys.gap(2, 0) * t);
  const complex z = (a[0] * a[0] - a[3] * a[3] * e30 * e30) * s2 + 2.0 * a[0] * a[3] * c2 * e30 -
                    a[1] * a[1] * e10 * e10 + a[2] * a[2] * e20 * e20;
  return std::min(1.0, std::abs(z));
}

std::array<complex, 4> product_coefficients(const AmplitudeState& state,
                                            const CoupledSystem& sys) {
  const auto b = rotated(state, sys);
  const double c = std::cos(sys.theta);
  const double s = std::sin(sys.theta);
  const double r = 1.0 / std::sqrt(2.0);
  return {b[0] * c - b[3] * s, r * (b[1] - b[2]), r * (b[1] + b[2]), b[0] * s + b[3] * c};
}

double concurrence_from_coefficients(const std::array<complex, 4>& c) {
  return std::min(1.0, 2.0 * std::abs(c[0] * c[3] - c[1] * c[2]));
}

double rwa_correlation(const RwaSolution& sol, const CoupledSystem&, double t) {
  const complex r0 = sol.r0, s0 = sol.s0, r1 = sol.r1, s1 = sol.s1;
  const double w = sol.omega;
  const double big = sol.rabi;
  const complex sum0 = r0 + s0;
  const complex sum1 = r1 + s1;
  const double slow = -big * t;

  const double first = std::norm(sum0) *
                       (std::norm(r0) + std::norm(s0) + 2.0 * std::real(std::conj(s0) * r0 * phase(slow)));
  const double second = std::norm(sum1) *
                        (std::norm(r1) + std::norm(s1) + 2.0 * std::real(std::conj(r1) * s1 * phase(slow)));
  const complex bracket = (std::conj(s0) * r1 + std::conj(r0) * s1) * phase(-w * t) +
                          std::conj(r0) * r1 * phase(-(w - big) * t) +
                          std::conj(s0) * s1 * phase(-(w + big) * t);
  const double third = 2.0 * std::real(sum0 * std::conj(sum1) * bracket);
  return std::sqrt(std::clamp(first + second + third, 0.0, 1.0));
}

double rwa_concurrence(const RwaSolution& sol, const CoupledSystem& sys, double t) {
  const complex r0 = sol.r0, s0 = sol.s0, r1 = sol.r1, s1 = sol.s1;
  const complex cr0 = std::conj(r0), cs0 = std::conj(s0), cr1 = std::conj(r1);
  const double w = sol.omega;
  const double big = sol.rabi;
  const double nr0 = std::norm(r0), ns0 = std::norm(s0), nr1 = std::norm(r1), ns1 = std::norm(s1);

  const double d0 = nr1 * nr1 + ns1 * ns1 + 4.0 * nr1 * ns1 +
                    2.0 * std::real(2.0 * (nr1 + ns1) * cr1 * s1 * phase(-big * t) +
                                    cr1 * cr1 * s1 * s1 * phase(-2.0 * big * t));
  const double d1 =
      2.0 * std::real((cr0 * cr0 * s1 * s1 + cs0 * cs0 * r1 * r1 + 4.0 * cr0 * cs0 * r1 * s1) *
                          phase(-2.0 * w * t) +
                      2.0 * (cr0 * cs0 * r1 * r1 + cr0 * cr0 * r1 * s1) * phase(-(2.0 * w - big) * t) +
                      2.0 * (cr0 * cs0 * s1 * s1 + cs0 * cs0 * r1 * s1) * phase(-(2.0 * w + big) * t) +
                      cr0 * cr0 * r1 * r1 * phase(-2.0 * (w - big) * t) +
                      cs0 * cs0 * s1 * s1 * phase(-2.0 * (w + big) * t));
  const double d2 = nr0 * nr0 + ns0 * ns0 + 4.0 * nr0 * ns0 +
                    2.0 * std::real(2.0 * (nr0 + ns0) * cs0 * r0 * phase(-big * t) +
                                    cs0 * cs0 * r0 * r0 * phase(-2.0 * big * t));
  const double s2 = std::sin(2.0 * sys.theta);
  return std::sqrt(std::clamp(d0 - d1 * s2 + d2 * s2 * s2, 0.0, 1.0));
}

DensityGrid density_grid(const AmplitudeState& state, const CoupledSystem& sys,
                         const GridSpec& spec) {
  DensityGrid grid;
  grid.t = state.t;
  grid.x1_axis = axis(spec);
  grid.x2_axis = grid.x1_axis;
  const auto psi = wavefunction(state, sys, grid.x1_axis);
  grid.values.resize(psi.size());
  double total = 0.0;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    grid.values[i] = std::norm(psi[i]);
    total += grid.values[i];
  }
  const double dx = grid.x1_axis[1] - grid.x1_axis[0];
  grid.norm_check = total * dx * dx;
  const double expected = norm_squared(state.a);
  if (!(std::abs(grid.norm_check - expected) <= spec.norm_tolerance)) {
    throw NumericError("density grid normalization " + std::to_string(grid.norm_check) +
                       " misses " + std::to_string(expected) + "; refine or widen the grid");
  }
  return grid;
}

double grid_oracle_expectation(const AmplitudeState& state, const CoupledSystem& sys, int well,
                               const GridSpec& spec) {
  if (well != 1 && well != 2) throw std::invalid_argument("well index must be 1 or 2");
  const auto xs = axis(spec);
  const auto psi = wavefunction(state, sys, xs);
  const std::size_t n = xs.size();
  double total = 0.0;
  double weight = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double rho = std::norm(psi[i * n + j]);
      total += rho * (well == 1 ? xs[i] : xs[j]);
      weight += rho;
    }
  }
  const double dx = xs[1] - xs[0];
  if (!(std::abs(weight * dx * dx - norm_squared(state.a)) <= spec.norm_tolerance)) {
    throw NumericError("quadrature grid does not resolve the state normalization");
  }
  return total * dx * dx;
}

ObservableSeries compute_series(const std::vector<AmplitudeState>& states,
                                const InitialState& initial, const CoupledSystem& sys) {
  ObservableSeries out;
  const auto n = states.size();
  out.times.reserve(n);
  out.populations.reserve(n);
  out.x1.reserve(n);
  out.x2.reserve(n);
  out.x_sum.reserve(n);
  out.corr.reserve(n);
  out.conc.reserve(n);
  for (const auto& s : states) {
    out.times.push_back(s.t);
    out.populations.push_back({s.population(0), s.population(1), s.population(2), s.population(3)});
    const auto p = expectation_positions(s, sys);
    out.x1.push_back(p.x1);
    out.x2.push_back(p.x2);
    out.x_sum.push_back(p.x_sum);
    out.corr.push_back(correlation(s, initial, sys));
    out.conc.push_back(concurrence(s, sys));
  }
  return out;
}

double time_average(const std::function<double(double)>& f, double t_end, double period,
                    double max_step) {
  if (!(period > 0.0) || !(max_step > 0.0) || !(t_end >= period)) {
    throw std::invalid_argument("time average needs 0 < period <= t_end and a positive step");
  }
  const double window = std::floor(t_end / period) * period;
  const auto n = static_cast<long>(std::ceil(window / max_step));
  const double h = window / static_cast<double>(n);
  double sum = 0.5 * (f(0.0) + f(window));
  for (long k = 1; k < n; ++k) sum += f(static_cast<double>(k) * h);
  return sum * h / window;
}

}  // namespace razavy
