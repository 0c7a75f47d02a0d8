#include "razavy/report.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "razavy/errors.hpp"

namespace razavy {

namespace {

std::string format_general(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buf.data(), ptr);
}

void write_array(std::ostream& out, const std::vector<double>& xs, Precision precision) {
  out << '[';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out << ',';
    out << format_number(xs[i], precision);
  }
  out << ']';
}

std::filesystem::path open_for_write(std::ofstream& file, const std::filesystem::path& path) {
  file.open(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot write " + path.string());
  return path;
}

}  // namespace

std::string format_number(double value, Precision precision) {
  if (!std::isfinite(value)) throw NumericError("refusing to serialize a non-finite value");
  if (value == 0.0) value = 0.0;  // drop the sign of negative zero
  const int digits = precision == Precision::machine ? 16 : 5;
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                       std::chars_format::scientific, digits);
  if (ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buf.data(), ptr);
}

void write_series_csv(std::ostream& out, const ObservableSeries& s, const OutputSelection& sel,
                      Precision precision) {
  out << kSeriesHeader << '\n';
  auto field = [&](bool on, double v) {
    out << ',';
    if (on) out << format_number(v, precision);
  };
  for (std::size_t i = 0; i < s.times.size(); ++i) {
    out << format_number(s.times[i], precision);
    for (int nu = 0; nu < 4; ++nu) field(sel.populations, s.populations[i][static_cast<std::size_t>(nu)]);
    field(sel.positions, s.x1[i]);
    field(sel.positions, s.x2[i]);
    field(sel.positions, s.x_sum[i]);
    field(sel.correlation, s.corr[i]);
    field(sel.concurrence, s.conc[i]);
    out << '\n';
  }
}

void write_grid_json(std::ostream& out, const DensityGrid& grid, Precision precision) {
  out << "{\"t\":" << format_number(grid.t, precision) << ",\"x1_axis\":";
  write_array(out, grid.x1_axis, precision);
  out << ",\"x2_axis\":";
  write_array(out, grid.x2_axis, precision);
  out << ",\"values\":";
  write_array(out, grid.values, precision);
  out << ",\"norm_check\":" << format_number(grid.norm_check, precision) << "}\n";
}

void write_averages_json(std::ostream& out, const std::string& scenario,
                         const ScenarioResult& result, Precision precision) {
  out << "{\n  \"scenario\": \"" << scenario << "\",\n  \"methods\": {";
  bool first = true;
  for (const auto& avg : result.averages) {
    out << (first ? "\n" : ",\n") << "    \"" << to_string(avg.method) << "\": {";
    first = false;
    out << "\"corr_sq_mean\": " << format_number(avg.corr_sq_mean, precision)
        << ", \"conc_sq_mean\": " << format_number(avg.conc_sq_mean, precision);
    if (avg.closed_form) {
      out << ", \"corr_sq_closed_form\": " << format_number(avg.closed_form->corr_sq, precision)
          << ", \"conc_sq_closed_form\": " << format_number(avg.closed_form->conc_sq, precision);
    }
    for (const auto& m : result.methods) {
      if (m.method == avg.method) out << ", \"norm_drift\": " << format_number(m.norm_drift, precision);
    }
    out << '}';
  }
  out << "\n  }\n}\n";
}

void write_sweep_csv(std::ostream& out, SweepParam param, const std::vector<SweepRow>& rows,
                     Precision precision) {
  out << to_string(param) << ",status,corr_sq_rwa,conc_sq_rwa,corr_sq_exact,conc_sq_exact\n";
  for (const auto& row : rows) {
    out << format_number(row.value, precision) << ',' << (row.ok ? "ok" : "failed");
    if (row.rwa_closed_form) {
      out << ',' << format_number(row.rwa_closed_form->corr_sq, precision) << ','
          << format_number(row.rwa_closed_form->conc_sq, precision);
    } else {
      out << ",,";
    }
    if (row.exact_means) {
      out << ',' << format_number(row.exact_means->first, precision) << ','
          << format_number(row.exact_means->second, precision);
    } else {
      out << ",,";
    }
    out << '\n';
  }
}

void write_eigen_table(std::ostream& out, const CoupledSystem& sys) {
  const auto& b = sys.basis;
  auto line = [&](const std::string& name, double v) {
    std::array<char, 64> buf{};
    const auto [ptr, ec] =
        std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 6);
    (void)ec;
    out << name << ' ' << std::string(buf.data(), ptr) << '\n';
  };
  line("hbar", b.params.hbar);
  line("mass", b.params.mass);
  line("xi", b.params.xi);
  line("g", sys.g);
  for (int n = 0; n < 4; ++n) line("eps" + std::to_string(n), b.eps[static_cast<std::size_t>(n)]);
  line("delta", b.delta());
  line("eps_sum", b.eps_sum());
  line("gamma", b.gamma);
  for (int n = 0; n < 4; ++n) line("E" + std::to_string(n), sys.energies[static_cast<std::size_t>(n)]);
  line("theta", sys.theta);
  line("alpha", sys.alpha);
  line("beta", sys.beta);
  line("delta10", sys.delta10());
}

std::vector<std::filesystem::path> write_scenario_outputs(const Scenario& sc,
                                                          const ScenarioResult& result,
                                                          const std::filesystem::path& out_dir,
                                                          Precision precision) {
  std::filesystem::create_directories(out_dir);
  std::vector<std::filesystem::path> written;
  const bool any_series = sc.outputs.populations || sc.outputs.positions ||
                          sc.outputs.correlation || sc.outputs.concurrence;
  if (any_series) {
    for (const auto& m : result.methods) {
      std::ofstream f;
      written.push_back(open_for_write(f, out_dir / (sc.name + "_" + std::string(to_string(m.method)) + ".csv")));
      write_series_csv(f, m.series, sc.outputs, precision);
    }
  }
  for (const auto& grid : result.grids) {
    std::ofstream f;
    written.push_back(open_for_write(f, out_dir / (sc.name + "_grid_t" + format_general(grid.t) + ".json")));
    write_grid_json(f, grid, precision);
  }
  if (sc.outputs.averages) {
    std::ofstream f;
    written.push_back(open_for_write(f, out_dir / (sc.name + "_averages.json")));
    write_averages_json(f, sc.name, result, precision);
  }
  return written;
}

}  // namespace razavy
