#pragma once

#include "razavy/coupled.hpp"
#include "razavy/dynamics.hpp"

namespace razavy {

/// Rotating-wave solution for the symmetric sinusoidal drive f sin(wt):
///   a0(t) = r0 e^{i(w - D10 - Omega)t/2} + s0 e^{i(w - D10 + Omega)t/2}
///   a1(t) = r1 e^{-i(w - D10 - Omega)t/2} + s1 e^{-i(w - D10 + Omega)t/2}
/// with a2, a3 frozen. Constants are kept exactly as the integration
/// constants A, B produce them (no global rephasing).
struct RwaSolution {
  complex r0, s0, r1, s1;
  double rabi = 0.0;     // Omega
  double omega = 0.0;    // drive frequency
  double delta10 = 0.0;
  complex a2, a3;
};

/// Omega = sqrt((w - D10)^2 + (alpha f / hbar)^2).
double rabi_frequency(const CoupledSystem& sys, double f, double omega);

/// Vanishing f yields the constant solution a(t) = a(0).
RwaSolution rwa_solve(const InitialState& initial, const CoupledSystem& sys, double f,
                      double omega);

Amplitudes rwa_amplitudes(const RwaSolution& sol, double t);

/// Drive on the first well only: same equations with f replaced by f / 2.
RwaSolution rwa_single_well_drive(const InitialState& initial, const CoupledSystem& sys,
                                  double f, double omega);

struct RwaAverages {
  double corr_sq = 0.0;  // long-time mean of Gamma^2
  double conc_sq = 0.0;  // long-time mean of C^2
};

/// Secular parts of the closed-form Gamma^2 and C^2 (oscillating terms dropped).
RwaAverages rwa_time_averages(const RwaSolution& sol, const CoupledSystem& sys);

/// Two-level solution for the step drive F(t) = f Theta(t) on levels 0, 1:
///   a1(t) = A e^{i(D10 - Omega_s)t/2} + B e^{i(D10 + Omega_s)t/2}
///   a0(t) = (hbar / 2 alpha f) [(D10 - Omega_s) A e^{-i(D10 + Omega_s)t/2}
///                              + (D10 + Omega_s) B e^{-i(D10 - Omega_s)t/2}]
struct TlaStepSolution {
  double rabi = 0.0;  // Omega_s = sqrt(D10^2 + 4 (alpha f / hbar)^2)
  double delta10 = 0.0;
  double alpha = 0.0;
  double f = 0.0;
  double hbar = 1.0;
  complex A, B;
  Amplitudes initial{};
};

TlaStepSolution tla_solve(const InitialState& initial, const CoupledSystem& sys, double f);

Amplitudes tla_amplitudes(const TlaStepSolution& sol, double t);

/// Ground-state start, the closed form printed for the step field.
Amplitudes tla_step_amplitudes(const CoupledSystem& sys, double f, double t);

}  // namespace razavy
