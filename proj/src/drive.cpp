#include "razavy/drive.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "razavy/errors.hpp"

namespace razavy {

namespace {

double eval_well(const WellField& field, double t) {
  if (const auto* p = std::get_if<ParametricField>(&field)) {
    switch (p->shape) {
      case ShapeKind::zero:
        return 0.0;
      case ShapeKind::sine:
        return p->amplitude * std::sin(p->omega * t);
      case ShapeKind::cosine:
        return p->amplitude * std::cos(p->omega * t);
      case ShapeKind::step:
        return t >= 0.0 ? p->amplitude : 0.0;
    }
    return 0.0;
  }
  const auto& s = std::get<SampledField>(field);
  if (t <= s.times.front()) return s.values.front();
  if (t >= s.times.back()) return s.values.back();
  const auto hi = std::upper_bound(s.times.begin(), s.times.end(), t);
  const auto i = static_cast<std::size_t>(hi - s.times.begin());
  const double w = (t - s.times[i - 1]) / (s.times[i] - s.times[i - 1]);
  return (1.0 - w) * s.values[i - 1] + w * s.values[i];
}

double well_peak(const WellField& field) {
  if (const auto* p = std::get_if<ParametricField>(&field)) {
    return p->shape == ShapeKind::zero ? 0.0 : std::abs(p->amplitude);
  }
  const auto& s = std::get<SampledField>(field);
  double peak = 0.0;
  for (double v : s.values) peak = std::max(peak, std::abs(v));
  return peak;
}

double well_frequency(const WellField& field) {
  if (const auto* p = std::get_if<ParametricField>(&field)) {
    return (p->shape == ShapeKind::sine || p->shape == ShapeKind::cosine) ? std::abs(p->omega) : 0.0;
  }
  const auto& s = std::get<SampledField>(field);
  double min_dt = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < s.times.size(); ++i) min_dt = std::min(min_dt, s.times[i] - s.times[i - 1]);
  return std::isfinite(min_dt) ? std::numbers::pi / min_dt : 0.0;
}

void validate_well(const WellField& field) {
  if (const auto* p = std::get_if<ParametricField>(&field)) {
    if (!std::isfinite(p->amplitude) || !std::isfinite(p->omega)) {
      throw ScenarioError("per-well field parameters must be finite");
    }
    if ((p->shape == ShapeKind::sine || p->shape == ShapeKind::cosine) && !(p->omega > 0.0)) {
      throw ScenarioError("oscillating per-well field needs omega > 0");
    }
    return;
  }
  const auto& s = std::get<SampledField>(field);
  if (s.times.empty() || s.times.size() != s.values.size()) {
    throw ScenarioError("sampled field needs equally many (>0) times and values");
  }
  for (std::size_t i = 0; i < s.times.size(); ++i) {
    if (!std::isfinite(s.times[i]) || !std::isfinite(s.values[i])) {
      throw ScenarioError("sampled field contains non-finite entries");
    }
    if (i > 0 && !(s.times[i] > s.times[i - 1])) {
      throw ScenarioError("sampled field times must be strictly increasing");
    }
  }
}

}  // namespace

std::string_view to_string(DriveKind kind) {
  switch (kind) {
    case DriveKind::none: return "none";
    case DriveKind::sinusoidal_symmetric: return "sinusoidal-symmetric";
    case DriveKind::step_symmetric: return "step-symmetric";
    case DriveKind::sinusoidal_antisymmetric: return "sinusoidal-antisymmetric";
    case DriveKind::sinusoidal_first_well: return "sinusoidal-first-well";
    case DriveKind::general: return "general";
  }
  return "none";
}

DriveKind drive_kind_from_string(std::string_view name) {
  for (auto kind : {DriveKind::none, DriveKind::sinusoidal_symmetric, DriveKind::step_symmetric,
                    DriveKind::sinusoidal_antisymmetric, DriveKind::sinusoidal_first_well,
                    DriveKind::general}) {
    if (to_string(kind) == name) return kind;
  }
  throw ParseError("unknown drive kind '" + std::string(name) + "'");
}

bool is_sinusoidal(DriveKind kind) {
  return kind == DriveKind::sinusoidal_symmetric || kind == DriveKind::sinusoidal_antisymmetric ||
         kind == DriveKind::sinusoidal_first_well;
}

DriveField DriveField::sinusoidal_symmetric(double f, double omega) {
  return {DriveKind::sinusoidal_symmetric, f, omega, {}, {}};
}

DriveField DriveField::step_symmetric(double f) {
  return {DriveKind::step_symmetric, f, 0.0, {}, {}};
}

DriveField DriveField::sinusoidal_antisymmetric(double f, double omega) {
  return {DriveKind::sinusoidal_antisymmetric, f, omega, {}, {}};
}

DriveField DriveField::sinusoidal_first_well(double f, double omega) {
  return {DriveKind::sinusoidal_first_well, f, omega, {}, {}};
}

DriveField DriveField::general(WellField first, WellField second) {
  return {DriveKind::general, 0.0, 0.0, std::move(first), std::move(second)};
}

void validate(const DriveField& drive) {
  if (!std::isfinite(drive.f) || drive.f < 0.0) {
    throw ScenarioError("drive amplitude f must be finite and non-negative");
  }
  if (is_sinusoidal(drive.kind) && !(std::isfinite(drive.omega) && drive.omega > 0.0)) {
    throw ScenarioError("sinusoidal drive needs a finite omega > 0");
  }
  if (drive.kind == DriveKind::general) {
    validate_well(drive.well1);
    validate_well(drive.well2);
  }
}

FieldPair eval_field(const DriveField& drive, double t) {
  switch (drive.kind) {
    case DriveKind::none:
      return {};
    case DriveKind::sinusoidal_symmetric: {
      const double v = drive.f * std::sin(drive.omega * t);
      return {v, v};
    }
    case DriveKind::step_symmetric: {
      const double v = t >= 0.0 ? drive.f : 0.0;
      return {v, v};
    }
    case DriveKind::sinusoidal_antisymmetric: {
      const double v = drive.f * std::sin(drive.omega * t);
      return {v, -v};
    }
    case DriveKind::sinusoidal_first_well:
      return {drive.f * std::sin(drive.omega * t), 0.0};
    case DriveKind::general:
      return {eval_well(drive.well1, t), eval_well(drive.well2, t)};
  }
  return {};
}

double peak_field(const DriveField& drive) {
  switch (drive.kind) {
    case DriveKind::none:
      return 0.0;
    case DriveKind::sinusoidal_first_well:
      return drive.f;
    case DriveKind::general:
      return well_peak(drive.well1) + well_peak(drive.well2);
    default:
      return 2.0 * drive.f;
  }
}

double fastest_frequency(const DriveField& drive) {
  if (is_sinusoidal(drive.kind)) return drive.omega;
  if (drive.kind == DriveKind::general) {
    return std::max(well_frequency(drive.well1), well_frequency(drive.well2));
  }
  return 0.0;
}

}  // namespace razavy
