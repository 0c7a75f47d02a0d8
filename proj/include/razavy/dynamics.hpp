#pragma once

#include <array>
#include <complex>
#include <vector>

#include "razavy/coupled.hpp"
#include "razavy/drive.hpp"

namespace razavy {

using complex = std::complex<double>;
using Amplitudes = std::array<complex, 4>;

double norm_squared(const Amplitudes& a);

/// Interaction-picture amplitudes a_nu(t) of
///   Psi(t) = sum_nu a_nu(t) Phi_nu exp(-i E_nu t / hbar).
struct AmplitudeState {
  double t = 0.0;
  Amplitudes a{};

  double population(int nu) const { return std::norm(a[static_cast<std::size_t>(nu)]); }
};

struct Trajectory {
  std::vector<AmplitudeState> states;
  double norm_drift = 0.0;  // max |1 - sum |a_nu|^2| over recorded states
  double step = 0.0;        // internal RK4 step actually used
};

class InitialState {
 public:
  enum class Kind { ground, wavepacket, custom };

  static InitialState ground();
  static InitialState wavepacket();
  /// Throws std::invalid_argument unless sum |a_nu|^2 = 1 within 1e-12.
  static InitialState custom(const Amplitudes& a);

  Kind kind() const { return kind_; }
  const Amplitudes& amplitudes() const { return a_; }
  /// True when levels 2 and 3 start empty (precondition of the RWA/TLA closed forms).
  bool in_lower_doublet() const;

 private:
  InitialState(Kind kind, const Amplitudes& a) : kind_(kind), a_(a) {}
  Kind kind_;
  Amplitudes a_;
};

struct IntegratorConfig {
  int points_per_period = 400;
  double step = 0.0;              // > 0 overrides the automatic choice
  double min_step = 1e-9;
  double norm_drift_limit = 1e-6; // hard failure bound
};

/// Right-hand side of the amplitude equations for per-well fields:
///   i hbar da_mu/dt = sum_nu <Phi_mu|H_I|Phi_nu> exp(-i Delta_{nu mu} t) a_nu.
Amplitudes amplitude_derivative(const AmplitudeState& state, const CoupledSystem& sys,
                                const DriveField& drive);

/// One classical RK4 step of size h.
AmplitudeState rk_step(const AmplitudeState& state, const CoupledSystem& sys,
                       const DriveField& drive, double h);

/// Internal step used by integrate() before it is rounded to divide dt_out.
double automatic_step(const CoupledSystem& sys, const DriveField& drive, int points_per_period);

/// Multiples of dt_out up to t_max, plus t_max when it is not a multiple.
std::vector<double> output_times(double t_max, double dt_out);

/// Fixed-step RK4 from t = 0 to t_max; states are recorded at multiples of
/// dt_out (plus t_max itself when it is not a multiple).
/// Throws NumericError on step underflow or when the norm drift exceeds the
/// configured bound.
Trajectory integrate(const InitialState& initial, const CoupledSystem& sys,
                     const DriveField& drive, double t_max, double dt_out,
                     const IntegratorConfig& config = {});

}  // namespace razavy
