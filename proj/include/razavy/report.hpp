#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "razavy/scenario.hpp"

namespace razavy {

/// Human mode prints 6 significant digits, machine mode 17 (round-trip).
enum class Precision { human, machine };

/// Locale-independent scientific notation, '.' separator.
std::string format_number(double value, Precision precision);

inline constexpr const char* kSeriesHeader = "t,p0,p1,p2,p3,x1,x2,x_sum,gamma,conc";

/// One row per sample; unselected columns are left empty.
void write_series_csv(std::ostream& out, const ObservableSeries& series,
                      const OutputSelection& outputs, Precision precision);

/// {"t", "x1_axis", "x2_axis", "values" (row-major, x1 outer), "norm_check"}.
void write_grid_json(std::ostream& out, const DensityGrid& grid, Precision precision);

void write_averages_json(std::ostream& out, const std::string& scenario,
                         const ScenarioResult& result, Precision precision);

void write_sweep_csv(std::ostream& out, SweepParam param, const std::vector<SweepRow>& rows,
                     Precision precision);

/// Constants of the single well and the coupled system at one g.
void write_eigen_table(std::ostream& out, const CoupledSystem& sys);

/// Writes <name>_<method>.csv, <name>_grid_t<t>.json and <name>_averages.json
/// under out_dir; returns the paths in the order written.
std::vector<std::filesystem::path> write_scenario_outputs(const Scenario& scenario,
                                                          const ScenarioResult& result,
                                                          const std::filesystem::path& out_dir,
                                                          Precision precision);

}  // namespace razavy
