#include "razavy/analytic.hpp"

#include <cmath>

namespace razavy {

namespace {

constexpr complex kI{0.0, 1.0};

complex phase(double angle) { return {std::cos(angle), std::sin(angle)}; }

double quartic_mix(const complex& r, const complex& s) {
  const double nr = std::norm(r);
  const double ns = std::norm(s);
  return nr * nr + ns * ns + 4.0 * nr * ns;
}

}  // namespace

double rabi_frequency(const CoupledSystem& sys, double f, double omega) {
  const double detuning = omega - sys.delta10();
  const double coupling = sys.alpha * f / sys.hbar();
  return std::sqrt(detuning * detuning + coupling * coupling);
}

RwaSolution rwa_solve(const InitialState& initial, const CoupledSystem& sys, double f,
                      double omega) {
  const auto& a = initial.amplitudes();
  RwaSolution sol;
  sol.omega = omega;
  sol.delta10 = sys.delta10();
  sol.rabi = rabi_frequency(sys, f, omega);
  sol.a2 = a[2];
  sol.a3 = a[3];

  const double detuning = omega - sol.delta10;
  const double coupling = sys.alpha * f / sys.hbar();
  if (coupling == 0.0) {
    // Only one exponential per amplitude is stationary; park a(0) there.
    if (detuning >= 0.0) {
      sol.r0 = a[0];
      sol.r1 = a[1];
    } else {
      sol.s0 = a[0];
      sol.s1 = a[1];
    }
    return sol;
  }

  const double big = sol.rabi;
  const complex A = (kI * coupling / (2.0 * big)) * a[0] + ((detuning + big) / (2.0 * big)) * a[1];
  const complex B = -(kI * coupling / (2.0 * big)) * a[0] - ((detuning - big) / (2.0 * big)) * a[1];
  const complex prefactor = kI / coupling;
  sol.r0 = B * prefactor * (detuning + big);
  sol.s0 = A * prefactor * (detuning - big);
  sol.r1 = A;
  sol.s1 = B;
  return sol;
}

Amplitudes rwa_amplitudes(const RwaSolution& sol, double t) {
  const double detuning = sol.omega - sol.delta10;
  const double slow = 0.5 * (detuning - sol.rabi) * t;
  const double fast = 0.5 * (detuning + sol.rabi) * t;
  return {sol.r0 * phase(slow) + sol.s0 * phase(fast),
          sol.r1 * phase(-slow) + sol.s1 * phase(-fast), sol.a2, sol.a3};
}

RwaSolution rwa_single_well_drive(const InitialState& initial, const CoupledSystem& sys,
                                  double f, double omega) {
  return rwa_solve(initial, sys, 0.5 * f, omega);
}

RwaAverages rwa_time_averages(const RwaSolution& sol, const CoupledSystem& sys) {
  const complex sum0 = sol.r0 + sol.s0;
  const complex sum1 = sol.r1 + sol.s1;
  const double sin2 = std::sin(2.0 * sys.theta);
  RwaAverages avg;
  avg.corr_sq = std::norm(sum0) * (std::norm(sol.r0) + std::norm(sol.s0)) +
                std::norm(sum1) * (std::norm(sol.r1) + std::norm(sol.s1));
  avg.conc_sq = quartic_mix(sol.r1, sol.s1) + sin2 * sin2 * quartic_mix(sol.r0, sol.s0);
  return avg;
}

TlaStepSolution tla_solve(const InitialState& initial, const CoupledSystem& sys, double f) {
  TlaStepSolution sol;
  sol.delta10 = sys.delta10();
  sol.alpha = sys.alpha;
  sol.f = f;
  sol.hbar = sys.hbar();
  sol.initial = initial.amplitudes();
  const double coupling = sys.alpha * f / sys.hbar();
  sol.rabi = std::sqrt(sol.delta10 * sol.delta10 + 4.0 * coupling * coupling);
  if (coupling != 0.0) {
    const auto& a = sol.initial;
    const complex p = 2.0 * coupling * a[0];
    sol.A = ((sol.delta10 + sol.rabi) * a[1] - p) / (2.0 * sol.rabi);
    sol.B = a[1] - sol.A;
  }
  return sol;
}

Amplitudes tla_amplitudes(const TlaStepSolution& sol, double t) {
  const auto& a = sol.initial;
  const double coupling = sol.alpha * sol.f / sol.hbar;
  if (coupling == 0.0) return a;
  const double d = sol.delta10;
  const double w = sol.rabi;
  const complex a0 = (1.0 / (2.0 * coupling)) *
                     ((d - w) * sol.A * phase(-0.5 * (d + w) * t) +
                      (d + w) * sol.B * phase(-0.5 * (d - w) * t));
  const complex a1 = sol.A * phase(0.5 * (d - w) * t) + sol.B * phase(0.5 * (d + w) * t);
  return {a0, a1, a[2], a[3]};
}

Amplitudes tla_step_amplitudes(const CoupledSystem& sys, double f, double t) {
  return tla_amplitudes(tla_solve(InitialState::ground(), sys, f), t);
}

}  // namespace razavy
