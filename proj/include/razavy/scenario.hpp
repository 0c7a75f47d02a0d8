#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "razavy/coupled.hpp"
#include "razavy/drive.hpp"
#include "razavy/dynamics.hpp"
#include "razavy/observables.hpp"
#include "razavy/potential.hpp"

namespace razavy {

enum class Method { exact, rwa, tla };

std::string_view to_string(Method method);

/// Drive as written in a scenario; the carrier may be given relative to the
/// gap D10 of the coupled system, so it is resolved only once g is known.
struct DriveSpec {
  DriveKind kind = DriveKind::none;
  double f = 0.0;
  std::optional<double> omega;
  std::optional<double> omega_ratio;  // omega = omega_ratio * D10
  WellField well1{};
  WellField well2{};
};

struct OutputSelection {
  bool populations = false;
  bool positions = false;
  bool correlation = false;
  bool concurrence = false;
  bool averages = false;
  std::vector<double> grid_times;
  GridSpec grid;

  bool any() const {
    return populations || positions || correlation || concurrence || averages ||
           !grid_times.empty();
  }
};

/// One simulation run. Text form (flat sections, '#' comments):
///
///   [system]   hbar, mass, xi, g
///   [drive]    kind, f, omega | omega_ratio, (general kind:) well1/well2
///              shape + amplitude/omega or times/values tables
///   [initial]  state = "ground" | "wavepacket" | "custom", re, im
///   [run]      t_max, dt_out, methods, points_per_period
///   [outputs]  series, averages, grid_times, grid_points, grid_extent
struct Scenario {
  std::string name = "scenario";
  PotentialParams params;
  double g = 0.0;
  DriveSpec drive;
  InitialState initial = InitialState::ground();
  double t_max = 400.0;
  double dt_out = 0.5;
  std::vector<Method> methods;
  OutputSelection outputs;
  IntegratorConfig integrator;

  bool has(Method m) const;
};

/// Throws ParseError on malformed text or unknown keys and ScenarioError on
/// values that parse but are out of range.
Scenario parse_scenario(std::string_view text, std::string name = "scenario");
Scenario load_scenario(const std::filesystem::path& path);

/// Semantic checks that need the whole scenario. Throws ScenarioError.
void validate(const Scenario& scenario);

DriveField resolve_drive(const DriveSpec& spec, const CoupledSystem& sys);

/// RWA validity hints (field too strong or carrier too far off resonance).
std::vector<std::string> rwa_warnings(const Scenario& scenario, const CoupledSystem& sys);

struct MethodResult {
  Method method = Method::exact;
  std::vector<AmplitudeState> states;
  ObservableSeries series;
  double norm_drift = 0.0;
};

struct AveragesSummary {
  Method method = Method::exact;
  double corr_sq_mean = 0.0;
  double conc_sq_mean = 0.0;
  std::optional<RwaAverages> closed_form;  // rwa only
};

struct ScenarioResult {
  CoupledSystem system;
  DriveField drive;
  std::vector<MethodResult> methods;
  std::vector<DensityGrid> grids;
  std::vector<AveragesSummary> averages;
  std::vector<std::string> warnings;
};

/// Runs every selected method. Pure computation, no files.
ScenarioResult run_scenario(const Scenario& scenario);

/// Trapezoidal means of Gamma^2 and C^2 over a sampled series.
std::pair<double, double> series_means(const ObservableSeries& series);

enum class SweepParam { f, g, omega, omega_ratio };

SweepParam sweep_param_from_string(std::string_view name);
std::string_view to_string(SweepParam param);

struct SweepRow {
  double value = 0.0;
  bool ok = true;
  std::string error;
  bool numeric_failure = false;  // NumericError, as opposed to a semantic error
  std::optional<RwaAverages> rwa_closed_form;
  std::optional<std::pair<double, double>> exact_means;  // (Gamma^2, C^2)
};

/// Evaluates the base scenario at each parameter value, fanning out over up
/// to `threads` workers; rows come back in input order. Per-point failures
/// are captured in the row rather than thrown.
std::vector<SweepRow> sweep(const Scenario& base, SweepParam param,
                            const std::vector<double>& values, unsigned threads = 0);

}  // namespace razavy
