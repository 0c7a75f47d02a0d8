#include "razavy/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "razavy/errors.hpp"

namespace razavy {

namespace {

constexpr complex kI{0.0, 1.0};

complex phase(double angle) { return {std::cos(angle), std::sin(angle)}; }

Amplitudes axpy(const Amplitudes& y, double h, const Amplitudes& k) {
  Amplitudes out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = y[i] + h * k[i];
  return out;
}

}  // namespace

double norm_squared(const Amplitudes& a) {
  double n = 0.0;
  for (const auto& z : a) n += std::norm(z);
  return n;
}

InitialState InitialState::ground() { return {Kind::ground, {1.0, 0.0, 0.0, 0.0}}; }

InitialState InitialState::wavepacket() {
  const double r = 1.0 / std::sqrt(2.0);
  return {Kind::wavepacket, {r, r, 0.0, 0.0}};
}

InitialState InitialState::custom(const Amplitudes& a) {
  const double n = norm_squared(a);
  if (!std::isfinite(n) || std::abs(n - 1.0) > 1e-12) {
    throw std::invalid_argument("custom initial state must have unit norm (got " +
                                std::to_string(n) + ")");
  }
  return {Kind::custom, a};
}

bool InitialState::in_lower_doublet() const { return a_[2] == 0.0 && a_[3] == 0.0; }

Amplitudes amplitude_derivative(const AmplitudeState& state, const CoupledSystem& sys,
                                const DriveField& drive) {
  const auto field = eval_field(drive, state.t);
  const double sum = field.first + field.second;
  const double diff = field.first - field.second;
  const double t = state.t;
  const auto& a = state.a;

  // Off-diagonal elements of H_I in the Phi basis.
  const double h01 = -0.5 * sys.alpha * sum;
  const double h02 = -0.5 * sys.beta * diff;
  const double h13 = -0.5 * sys.beta * sum;
  const double h23 = 0.5 * sys.alpha * diff;

  const complex p10 = phase(-sys.gap(1, 0) * t);
  const complex p20 = phase(-sys.gap(2, 0) * t);
  const complex p31 = phase(-sys.gap(3, 1) * t);
  const complex p32 = phase(-sys.gap(3, 2) * t);

  const complex scale = -kI / sys.hbar();
  Amplitudes rate;
  rate[0] = scale * (h01 * p10 * a[1] + h02 * p20 * a[2]);
  rate[1] = scale * (h01 * std::conj(p10) * a[0] + h13 * p31 * a[3]);
  rate[2] = scale * (h02 * std::conj(p20) * a[0] + h23 * p32 * a[3]);
  rate[3] = scale * (h13 * std::conj(p31) * a[1] + h23 * std::conj(p32) * a[2]);
  return rate;
}

AmplitudeState rk_step(const AmplitudeState& state, const CoupledSystem& sys,
                       const DriveField& drive, double h) {
  const double t = state.t;
  const auto k1 = amplitude_derivative(state, sys, drive);
  const auto k2 = amplitude_derivative({t + 0.5 * h, axpy(state.a, 0.5 * h, k1)}, sys, drive);
  const auto k3 = amplitude_derivative({t + 0.5 * h, axpy(state.a, 0.5 * h, k2)}, sys, drive);
  const auto k4 = amplitude_derivative({t + h, axpy(state.a, h, k3)}, sys, drive);
  AmplitudeState next{t + h, {}};
  for (std::size_t i = 0; i < 4; ++i) {
    next.a[i] = state.a[i] + (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  return next;
}

double automatic_step(const CoupledSystem& sys, const DriveField& drive, int points_per_period) {
  if (points_per_period <= 0) {
    throw std::invalid_argument("points_per_period must be positive");
  }
  double fastest_gap = 0.0;
  for (int nu = 0; nu < 4; ++nu) {
    for (int mu = 0; mu < 4; ++mu) fastest_gap = std::max(fastest_gap, std::abs(sys.gap(nu, mu)));
  }
  // Carrier plus the largest transition frequency, plus a Rabi-rate bound.
  const double rabi = std::max(sys.alpha, std::abs(sys.beta)) * peak_field(drive) / sys.hbar();
  const double rate = fastest_frequency(drive) + fastest_gap + rabi;
  return 2.0 * std::numbers::pi / (points_per_period * rate);
}

std::vector<double> output_times(double t_max, double dt_out) {
  std::vector<double> times;
  const auto n_out = static_cast<long>(std::floor(t_max / dt_out + 1e-9));
  times.reserve(static_cast<std::size_t>(n_out) + 2);
  for (long k = 0; k <= n_out; ++k) times.push_back(static_cast<double>(k) * dt_out);
  if (t_max - times.back() > 1e-9 * dt_out) times.push_back(t_max);
  return times;
}

Trajectory integrate(const InitialState& initial, const CoupledSystem& sys,
                     const DriveField& drive, double t_max, double dt_out,
                     const IntegratorConfig& config) {
  if (!(t_max > 0.0) || !std::isfinite(t_max)) throw std::invalid_argument("t_max must be positive");
  if (!(dt_out > 0.0) || !std::isfinite(dt_out)) throw std::invalid_argument("dt_out must be positive");

  const double target = config.step > 0.0 ? config.step
                                          : automatic_step(sys, drive, config.points_per_period);
  const double interval = std::min(dt_out, t_max);
  const auto substeps = static_cast<long>(std::ceil(interval / target - 1e-12));
  const double h = interval / static_cast<double>(std::max(1L, substeps));
  if (!(h >= config.min_step)) {
    throw NumericError("RK4 step " + std::to_string(h) + " underflows the minimum " +
                       std::to_string(config.min_step));
  }

  const auto sample_times = output_times(t_max, dt_out);

  Trajectory traj;
  traj.step = h;
  traj.states.reserve(sample_times.size());
  AmplitudeState state{0.0, initial.amplitudes()};
  traj.states.push_back(state);

  for (std::size_t k = 1; k < sample_times.size(); ++k) {
    const double t0 = sample_times[k - 1];
    const double span = sample_times[k] - t0;
    const auto n = static_cast<long>(std::max(1.0, std::ceil(span / h - 1e-9)));
    const double step = span / static_cast<double>(n);
    for (long j = 0; j < n; ++j) {
      state.t = t0 + static_cast<double>(j) * step;
      state = rk_step(state, sys, drive, step);
    }
    state.t = sample_times[k];
    const double drift = std::abs(1.0 - norm_squared(state.a));
    if (!(drift <= config.norm_drift_limit)) {
      throw NumericError("norm drift " + std::to_string(drift) + " at t = " +
                         std::to_string(state.t) + " exceeds the integrator bound");
    }
    traj.norm_drift = std::max(traj.norm_drift, drift);
    traj.states.push_back(state);
  }
  return traj;
}

}  // namespace razavy
