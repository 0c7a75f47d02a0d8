// razavy-dw: command-line front end for the driven coupled double-well model.
//
//   razavy-dw run <file> [--out DIR]
//   razavy-dw eigen --g G [--xi XI]
//   razavy-dw sweep --param P (--from A --to B --steps N | --values v,...) <file>
//
// Exit codes: 0 success, 2 parse error, 3 invalid scenario, 4 numeric failure.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "razavy/coupled.hpp"
#include "razavy/errors.hpp"
#include "razavy/potential.hpp"
#include "razavy/report.hpp"
#include "razavy/scenario.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitSemantic = 3;
constexpr int kExitNumeric = 4;

struct GlobalOptions {
  bool machine = false;
  bool quiet = false;

  razavy::Precision precision() const {
    return machine ? razavy::Precision::machine : razavy::Precision::human;
  }
};

int cmd_run(const GlobalOptions& opts, const std::string& file, const std::string& out_dir) {
  const auto scenario = razavy::load_scenario(file);
  const auto result = razavy::run_scenario(scenario);
  if (!opts.quiet) {
    for (const auto& w : result.warnings) std::cerr << "warning: " << w << '\n';
  }
  const auto written = razavy::write_scenario_outputs(scenario, result, out_dir, opts.precision());
  if (!opts.quiet) {
    for (const auto& p : written) std::cout << p.string() << '\n';
  }
  return 0;
}

int cmd_eigen(double g, double xi) {
  razavy::PotentialParams params;
  params.xi = xi;
  try {
    razavy::validate(params);
    const auto basis = razavy::normalization_and_gamma(params);
    razavy::write_eigen_table(std::cout, razavy::build_coupled(basis, g));
  } catch (const std::invalid_argument& e) {
    throw razavy::ScenarioError(e.what());
  }
  return 0;
}

int cmd_sweep(const GlobalOptions& opts, const std::string& file, const std::string& param,
              std::vector<double> values, double from, double to, int steps,
              const std::string& out_file, unsigned threads) {
  const auto base = razavy::load_scenario(file);
  const auto which = razavy::sweep_param_from_string(param);
  if (values.empty()) {
    if (steps < 2) throw razavy::ScenarioError("sweep range needs --steps >= 2 or --values");
    for (int i = 0; i < steps; ++i) values.push_back(from + (to - from) * i / (steps - 1));
  }
  const auto rows = razavy::sweep(base, which, values, threads);

  std::ofstream file_out;
  if (!out_file.empty()) {
    file_out.open(out_file, std::ios::binary | std::ios::trunc);
    if (!file_out) throw std::runtime_error("cannot write " + out_file);
  }
  std::ostream& out = out_file.empty() ? std::cout : file_out;
  razavy::write_sweep_csv(out, which, rows, opts.precision());
  out.flush();

  int code = 0;
  for (const auto& row : rows) {
    if (row.ok) continue;
    std::cerr << "error: " << param << " = " << row.value << ": " << row.error << '\n';
    code = std::max(code, row.numeric_failure ? kExitNumeric : kExitSemantic);
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Driven coupled double wells in Razavy's potential"};
  app.require_subcommand(1);
  GlobalOptions opts;
  app.add_flag("--machine", opts.machine, "Full round-trip precision (17 significant digits)");
  app.add_flag("--quiet", opts.quiet, "Suppress warnings and file listings");

  std::string run_file;
  std::string out_dir = ".";
  auto* run = app.add_subcommand("run", "Run a scenario file and write CSV/JSON artifacts");
  run->add_option("file", run_file, "Scenario file")->required();
  run->add_option("--out", out_dir, "Output directory");

  double eigen_g = 0.0;
  double eigen_xi = 1.0;
  auto* eigen = app.add_subcommand("eigen", "Print single-well and coupled-system constants");
  eigen->add_option("--g", eigen_g, "Coupling g")->required();
  eigen->add_option("--xi", eigen_xi, "Potential shape parameter xi");

  std::string sweep_file;
  std::string sweep_param;
  std::vector<double> sweep_values;
  double sweep_from = 0.0;
  double sweep_to = 0.0;
  int sweep_steps = 0;
  std::string sweep_out;
  unsigned sweep_threads = 0;
  auto* sweep = app.add_subcommand("sweep", "Long-time averages across a parameter range");
  sweep->add_option("file", sweep_file, "Base scenario file")->required();
  sweep->add_option("--param", sweep_param, "f, g, omega or omega_ratio")->required();
  sweep->add_option("--from", sweep_from, "First value");
  sweep->add_option("--to", sweep_to, "Last value");
  sweep->add_option("--steps", sweep_steps, "Number of evenly spaced points");
  sweep->add_option("--values", sweep_values, "Explicit values")->delimiter(',');
  sweep->add_option("--out", sweep_out, "Write CSV here instead of standard output");
  sweep->add_option("--threads", sweep_threads, "Worker threads (0 = hardware)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  }

  try {
    if (*run) return cmd_run(opts, run_file, out_dir);
    if (*eigen) return cmd_eigen(eigen_g, eigen_xi);
    if (*sweep) {
      return cmd_sweep(opts, sweep_file, sweep_param, sweep_values, sweep_from, sweep_to,
                       sweep_steps, sweep_out, sweep_threads);
    }
  } catch (const razavy::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const razavy::ScenarioError& e) {
    std::cerr << "invalid scenario: " << e.what() << '\n';
    return kExitSemantic;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid scenario: " << e.what() << '\n';
    return kExitSemantic;
  } catch (const razavy::NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return EXIT_FAILURE;
  }
  return 0;
}
