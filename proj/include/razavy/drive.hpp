#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace razavy {

enum class DriveKind {
  none,
  sinusoidal_symmetric,      // F1 = F2 = f sin(wt)
  step_symmetric,            // F1 = F2 = f Theta(t)
  sinusoidal_antisymmetric,  // F1 = -F2 = f sin(wt)
  sinusoidal_first_well,     // F1 = f sin(wt), F2 = 0
  general,                   // independent per-well shapes
};

std::string_view to_string(DriveKind kind);
/// Throws ParseError for unknown names.
DriveKind drive_kind_from_string(std::string_view name);

bool is_sinusoidal(DriveKind kind);

/// Field on one well given as samples, linearly interpolated and held
/// constant outside the sampled range.
struct SampledField {
  std::vector<double> times;
  std::vector<double> values;
};

enum class ShapeKind { zero, sine, cosine, step };

struct ParametricField {
  ShapeKind shape = ShapeKind::zero;
  double amplitude = 0.0;
  double omega = 0.0;
};

using WellField = std::variant<ParametricField, SampledField>;

struct FieldPair {
  double first = 0.0;
  double second = 0.0;
};

struct DriveField {
  DriveKind kind = DriveKind::none;
  double f = 0.0;
  double omega = 0.0;
  WellField well1{};
  WellField well2{};

  static DriveField none() { return {}; }
  static DriveField sinusoidal_symmetric(double f, double omega);
  static DriveField step_symmetric(double f);
  static DriveField sinusoidal_antisymmetric(double f, double omega);
  static DriveField sinusoidal_first_well(double f, double omega);
  static DriveField general(WellField first, WellField second);
};

/// Throws ScenarioError when amplitudes are negative, frequencies are not
/// positive for sinusoidal kinds, or sample tables are malformed.
void validate(const DriveField& drive);

/// Theta(0) = 1: the step is already on at t = 0.
FieldPair eval_field(const DriveField& drive, double t);

/// Upper bound on |F1| + |F2| over all t.
double peak_field(const DriveField& drive);

/// Fastest angular frequency present in the field (zero for static shapes).
/// Sampled tables report pi / (smallest sample spacing).
double fastest_frequency(const DriveField& drive);

}  // namespace razavy
