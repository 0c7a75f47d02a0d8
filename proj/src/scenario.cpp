#include "razavy/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>
#include <type_traits>
#include <variant>

#include "razavy/analytic.hpp"
#include "razavy/errors.hpp"

namespace razavy {

namespace {

// ---------------------------------------------------------------------------
// Flat key-value text: [section] headers, key = value lines, '#' comments.
// Values are numbers, booleans, "strings", or one-line [arrays] of either.

using Value = std::variant<double, bool, std::string, std::vector<double>, std::vector<std::string>>;
using Table = std::map<std::string, std::map<std::string, Value>>;

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string strip_comment(const std::string& line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

[[noreturn]] void fail(int line_no, const std::string& msg) {
  throw ParseError("line " + std::to_string(line_no) + ": " + msg);
}

double parse_number(const std::string& text, int line_no) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) fail(line_no, "invalid number '" + text + "'");
  return v;
}

std::string parse_string(const std::string& text, int line_no) {
  if (text.size() < 2 || text.front() != '"' || text.back() != '"') {
    fail(line_no, "expected a quoted string, got '" + text + "'");
  }
  const std::string inner = text.substr(1, text.size() - 2);
  if (inner.find('"') != std::string::npos) fail(line_no, "stray quote in string");
  return inner;
}

Value parse_value(const std::string& text, int line_no) {
  if (text.empty()) fail(line_no, "missing value");
  if (text == "true") return true;
  if (text == "false") return false;
  if (text.front() == '"') return parse_string(text, line_no);
  if (text.front() == '[') {
    if (text.back() != ']') fail(line_no, "unterminated array");
    const std::string body = trim(std::string_view(text).substr(1, text.size() - 2));
    std::vector<std::string> items;
    if (!body.empty()) {
      std::stringstream ss(body);
      std::string item;
      while (std::getline(ss, item, ',')) items.push_back(trim(item));
      if (body.back() == ',') items.pop_back();
    }
    for (const auto& item : items) {
      if (item.empty()) fail(line_no, "empty array element");
    }
    if (!items.empty() && items.front().front() == '"') {
      std::vector<std::string> out;
      for (const auto& item : items) out.push_back(parse_string(item, line_no));
      return out;
    }
    std::vector<double> out;
    for (const auto& item : items) out.push_back(parse_number(item, line_no));
    return out;
  }
  return parse_number(text, line_no);
}

Table parse_table(std::string_view text) {
  Table table;
  std::string section;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    if (line.front() == '[' && line.find('=') == std::string::npos) {
      if (line.back() != ']') fail(line_no, "unterminated section header");
      section = trim(std::string_view(line).substr(1, line.size() - 2));
      if (section.empty()) fail(line_no, "empty section name");
      if (table.count(section)) fail(line_no, "duplicate section [" + section + "]");
      table[section];
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(line_no, "expected 'key = value'");
    if (section.empty()) fail(line_no, "key outside of any section");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    if (key.empty()) fail(line_no, "empty key");
    auto& entries = table[section];
    if (entries.count(key)) fail(line_no, "duplicate key '" + key + "'");
    entries[key] = parse_value(trim(std::string_view(line).substr(eq + 1)), line_no);
  }
  return table;
}

// Typed access that consumes keys so leftovers can be reported as unknown.
class Reader {
 public:
  explicit Reader(Table table) : table_(std::move(table)) {}

  template <typename T>
  std::optional<T> take(const std::string& section, const std::string& key) {
    auto sit = table_.find(section);
    if (sit == table_.end()) return std::nullopt;
    auto kit = sit->second.find(key);
    if (kit == sit->second.end()) return std::nullopt;
    Value v = std::move(kit->second);
    sit->second.erase(kit);
    if (auto* p = std::get_if<T>(&v)) return std::move(*p);
    // An empty array parses as numeric; allow it where strings are expected.
    if constexpr (std::is_same_v<T, std::vector<std::string>>) {
      if (auto* p = std::get_if<std::vector<double>>(&v); p && p->empty()) return T{};
    }
    throw ParseError("[" + section + "] " + key + " has the wrong type");
  }

  void finish() const {
    static const std::set<std::string> sections = {"system", "drive", "initial", "run", "outputs"};
    for (const auto& [section, entries] : table_) {
      if (!sections.count(section)) throw ParseError("unknown section [" + section + "]");
      if (!entries.empty()) {
        throw ParseError("unknown key '" + entries.begin()->first + "' in [" + section + "]");
      }
    }
  }

 private:
  Table table_;
};

ShapeKind shape_from_string(const std::string& name) {
  if (name == "zero") return ShapeKind::zero;
  if (name == "sine") return ShapeKind::sine;
  if (name == "cosine") return ShapeKind::cosine;
  if (name == "step") return ShapeKind::step;
  throw ParseError("unknown well shape '" + name + "'");
}

WellField read_well(Reader& r, const std::string& prefix) {
  const auto shape = r.take<std::string>("drive", prefix + "_shape").value_or("zero");
  if (shape == "table") {
    SampledField s;
    s.times = r.take<std::vector<double>>("drive", prefix + "_times").value_or(std::vector<double>{});
    s.values = r.take<std::vector<double>>("drive", prefix + "_values").value_or(std::vector<double>{});
    return s;
  }
  ParametricField p;
  p.shape = shape_from_string(shape);
  p.amplitude = r.take<double>("drive", prefix + "_amplitude").value_or(0.0);
  p.omega = r.take<double>("drive", prefix + "_omega").value_or(0.0);
  return p;
}

Method method_from_string(const std::string& name) {
  if (name == "exact") return Method::exact;
  if (name == "rwa") return Method::rwa;
  if (name == "tla") return Method::tla;
  throw ParseError("unknown method '" + name + "'");
}

std::vector<AmplitudeState> closed_form_states(const std::vector<double>& times,
                                               const std::function<Amplitudes(double)>& eval) {
  std::vector<AmplitudeState> states;
  states.reserve(times.size());
  for (double t : times) states.push_back({t, eval(t)});
  return states;
}

double trapezoid_mean(const std::vector<double>& t, const std::vector<double>& y) {
  if (t.size() < 2) return y.empty() ? 0.0 : y.front();
  double acc = 0.0;
  for (std::size_t i = 1; i < t.size(); ++i) acc += 0.5 * (y[i] + y[i - 1]) * (t[i] - t[i - 1]);
  return acc / (t.back() - t.front());
}

AmplitudeState state_at(const Scenario& sc, const CoupledSystem& sys, const DriveField& drive,
                        const MethodResult& source, double t) {
  for (const auto& s : source.states) {
    if (std::abs(s.t - t) <= 1e-9) return s;
  }
  if (t == 0.0) return {0.0, sc.initial.amplitudes()};
  switch (source.method) {
    case Method::exact:
      return integrate(sc.initial, sys, drive, t, t, sc.integrator).states.back();
    case Method::rwa: {
      const auto sol = drive.kind == DriveKind::sinusoidal_first_well
                           ? rwa_single_well_drive(sc.initial, sys, drive.f, drive.omega)
                           : rwa_solve(sc.initial, sys, drive.f, drive.omega);
      return {t, rwa_amplitudes(sol, t)};
    }
    case Method::tla:
      return {t, tla_amplitudes(tla_solve(sc.initial, sys, drive.f), t)};
  }
  return {};
}

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::exact: return "exact";
    case Method::rwa: return "rwa";
    case Method::tla: return "tla";
  }
  return "exact";
}

bool Scenario::has(Method m) const {
  return std::find(methods.begin(), methods.end(), m) != methods.end();
}

Scenario parse_scenario(std::string_view text, std::string name) {
  Reader r(parse_table(text));
  Scenario sc;
  sc.name = std::move(name);

  sc.params.hbar = r.take<double>("system", "hbar").value_or(1.0);
  sc.params.mass = r.take<double>("system", "mass").value_or(1.0);
  sc.params.xi = r.take<double>("system", "xi").value_or(1.0);
  sc.g = r.take<double>("system", "g").value_or(0.0);

  sc.drive.kind = drive_kind_from_string(r.take<std::string>("drive", "kind").value_or("none"));
  sc.drive.f = r.take<double>("drive", "f").value_or(0.0);
  sc.drive.omega = r.take<double>("drive", "omega");
  sc.drive.omega_ratio = r.take<double>("drive", "omega_ratio");
  if (sc.drive.kind == DriveKind::general) {
    sc.drive.well1 = read_well(r, "well1");
    sc.drive.well2 = read_well(r, "well2");
  }

  const auto state = r.take<std::string>("initial", "state").value_or("ground");
  const auto re = r.take<std::vector<double>>("initial", "re");
  const auto im = r.take<std::vector<double>>("initial", "im");
  if (state == "ground") {
    sc.initial = InitialState::ground();
  } else if (state == "wavepacket") {
    sc.initial = InitialState::wavepacket();
  } else if (state == "custom") {
    if (!re || re->size() != 4 || (im && im->size() != 4)) {
      throw ScenarioError("custom initial state needs re (and optionally im) with 4 entries");
    }
    Amplitudes a;
    for (std::size_t i = 0; i < 4; ++i) a[i] = {(*re)[i], im ? (*im)[i] : 0.0};
    try {
      sc.initial = InitialState::custom(a);
    } catch (const std::invalid_argument& e) {
      throw ScenarioError(e.what());
    }
  } else {
    throw ParseError("unknown initial state '" + state + "'");
  }

  sc.t_max = r.take<double>("run", "t_max").value_or(400.0);
  sc.dt_out = r.take<double>("run", "dt_out").value_or(0.5);
  for (const auto& m : r.take<std::vector<std::string>>("run", "methods").value_or(std::vector<std::string>{})) {
    const auto method = method_from_string(m);
    if (!sc.has(method)) sc.methods.push_back(method);
  }
  if (auto ppp = r.take<double>("run", "points_per_period")) {
    if (!(*ppp >= 1.0) || *ppp != std::floor(*ppp)) throw ScenarioError("points_per_period must be a positive integer");
    sc.integrator.points_per_period = static_cast<int>(*ppp);
  }

  for (const auto& s : r.take<std::vector<std::string>>("outputs", "series").value_or(std::vector<std::string>{})) {
    if (s == "populations") sc.outputs.populations = true;
    else if (s == "positions") sc.outputs.positions = true;
    else if (s == "correlation") sc.outputs.correlation = true;
    else if (s == "concurrence") sc.outputs.concurrence = true;
    else throw ParseError("unknown output series '" + s + "'");
  }
  sc.outputs.averages = r.take<bool>("outputs", "averages").value_or(false);
  sc.outputs.grid_times = r.take<std::vector<double>>("outputs", "grid_times").value_or(std::vector<double>{});
  if (auto pts = r.take<double>("outputs", "grid_points")) {
    if (!(*pts >= 2.0) || *pts != std::floor(*pts)) throw ScenarioError("grid_points must be an integer >= 2");
    sc.outputs.grid.points = static_cast<int>(*pts);
  }
  sc.outputs.grid.extent = r.take<double>("outputs", "grid_extent").value_or(3.0);

  r.finish();
  validate(sc);
  return sc;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str(), path.stem().string());
}

void validate(const Scenario& sc) {
  try {
    validate(sc.params);
  } catch (const std::invalid_argument& e) {
    throw ScenarioError(e.what());
  }
  if (!std::isfinite(sc.g) || sc.g < 0.0) throw ScenarioError("coupling g must be non-negative");
  if (sc.methods.empty()) throw ScenarioError("scenario selects no method");
  if (!sc.outputs.any()) throw ScenarioError("scenario selects no output");
  if (!(sc.t_max > 0.0) || !std::isfinite(sc.t_max)) throw ScenarioError("t_max must be positive");
  if (!(sc.dt_out > 0.0) || !std::isfinite(sc.dt_out)) throw ScenarioError("dt_out must be positive");

  const auto kind = sc.drive.kind;
  if (!std::isfinite(sc.drive.f) || sc.drive.f < 0.0) throw ScenarioError("drive amplitude f must be non-negative");
  if (is_sinusoidal(kind)) {
    if (sc.drive.omega.has_value() == sc.drive.omega_ratio.has_value()) {
      throw ScenarioError("sinusoidal drive needs exactly one of omega, omega_ratio");
    }
    const double w = sc.drive.omega ? *sc.drive.omega : *sc.drive.omega_ratio;
    if (!(w > 0.0) || !std::isfinite(w)) throw ScenarioError("drive frequency must be positive");
  }
  if (sc.has(Method::rwa) && kind != DriveKind::sinusoidal_symmetric &&
      kind != DriveKind::sinusoidal_first_well) {
    throw ScenarioError("rwa needs a sinusoidal-symmetric or sinusoidal-first-well drive");
  }
  if (sc.has(Method::tla) && kind != DriveKind::step_symmetric) {
    throw ScenarioError("tla needs a step-symmetric drive");
  }
  for (double t : sc.outputs.grid_times) {
    if (!(t >= 0.0 && t <= sc.t_max)) throw ScenarioError("grid times must lie in [0, t_max]");
  }
  if (!(sc.outputs.grid.extent > 0.0)) throw ScenarioError("grid_extent must be positive");
  if (kind == DriveKind::general) {
    validate(DriveField::general(sc.drive.well1, sc.drive.well2));
  }
}

DriveField resolve_drive(const DriveSpec& spec, const CoupledSystem& sys) {
  const double omega = spec.omega ? *spec.omega : spec.omega_ratio.value_or(0.0) * sys.delta10();
  DriveField d;
  switch (spec.kind) {
    case DriveKind::none: d = DriveField::none(); break;
    case DriveKind::sinusoidal_symmetric: d = DriveField::sinusoidal_symmetric(spec.f, omega); break;
    case DriveKind::step_symmetric: d = DriveField::step_symmetric(spec.f); break;
    case DriveKind::sinusoidal_antisymmetric: d = DriveField::sinusoidal_antisymmetric(spec.f, omega); break;
    case DriveKind::sinusoidal_first_well: d = DriveField::sinusoidal_first_well(spec.f, omega); break;
    case DriveKind::general: d = DriveField::general(spec.well1, spec.well2); break;
  }
  validate(d);
  return d;
}

std::vector<std::string> rwa_warnings(const Scenario& sc, const CoupledSystem& sys) {
  std::vector<std::string> out;
  if (!sc.has(Method::rwa)) return out;
  const auto drive = resolve_drive(sc.drive, sys);
  const double f = drive.kind == DriveKind::sinusoidal_first_well ? 0.5 * drive.f : drive.f;
  const double d10 = sys.delta10();
  if (sys.alpha * f / sys.hbar() > 0.5 * d10) {
    out.push_back("rwa: field coupling alpha*f/hbar exceeds half the gap D10; expect poor agreement");
  }
  if (std::abs(drive.omega - d10) > 0.5 * d10) {
    out.push_back("rwa: carrier detuned from D10 by more than half the gap; expect poor agreement");
  }
  return out;
}

std::pair<double, double> series_means(const ObservableSeries& s) {
  std::vector<double> g2(s.corr.size()), c2(s.conc.size());
  for (std::size_t i = 0; i < g2.size(); ++i) g2[i] = s.corr[i] * s.corr[i];
  for (std::size_t i = 0; i < c2.size(); ++i) c2[i] = s.conc[i] * s.conc[i];
  return {trapezoid_mean(s.times, g2), trapezoid_mean(s.times, c2)};
}

ScenarioResult run_scenario(const Scenario& sc) {
  validate(sc);
  ScenarioResult res;
  const auto basis = normalization_and_gamma(sc.params);
  res.system = build_coupled(basis, sc.g);
  const auto& sys = res.system;
  res.drive = resolve_drive(sc.drive, sys);
  res.warnings = rwa_warnings(sc, sys);
  const auto times = output_times(sc.t_max, sc.dt_out);

  for (Method m : sc.methods) {
    MethodResult mr;
    mr.method = m;
    switch (m) {
      case Method::exact: {
        auto traj = integrate(sc.initial, sys, res.drive, sc.t_max, sc.dt_out, sc.integrator);
        mr.states = std::move(traj.states);
        mr.norm_drift = traj.norm_drift;
        break;
      }
      case Method::rwa: {
        const auto sol = res.drive.kind == DriveKind::sinusoidal_first_well
                             ? rwa_single_well_drive(sc.initial, sys, res.drive.f, res.drive.omega)
                             : rwa_solve(sc.initial, sys, res.drive.f, res.drive.omega);
        mr.states = closed_form_states(times, [&](double t) { return rwa_amplitudes(sol, t); });
        if (sc.outputs.averages) {
          AveragesSummary avg;
          avg.method = m;
          avg.closed_form = rwa_time_averages(sol, sys);
          res.averages.push_back(avg);
        }
        break;
      }
      case Method::tla: {
        const auto sol = tla_solve(sc.initial, sys, res.drive.f);
        mr.states = closed_form_states(times, [&](double t) { return tla_amplitudes(sol, t); });
        break;
      }
    }
    for (const auto& s : mr.states) mr.norm_drift = std::max(mr.norm_drift, std::abs(1.0 - norm_squared(s.a)));
    mr.series = compute_series(mr.states, sc.initial, sys);

    if (sc.outputs.averages) {
      const auto [g2, c2] = series_means(mr.series);
      auto it = std::find_if(res.averages.begin(), res.averages.end(),
                             [&](const AveragesSummary& a) { return a.method == m; });
      if (it == res.averages.end()) {
        res.averages.push_back({m, 0.0, 0.0, std::nullopt});
        it = std::prev(res.averages.end());
      }
      it->corr_sq_mean = g2;
      it->conc_sq_mean = c2;
    }
    res.methods.push_back(std::move(mr));
  }

  if (!sc.outputs.grid_times.empty()) {
    const auto& source = res.methods.front();
    for (double t : sc.outputs.grid_times) {
      res.grids.push_back(density_grid(state_at(sc, sys, res.drive, source, t), sys, sc.outputs.grid));
    }
  }
  return res;
}

SweepParam sweep_param_from_string(std::string_view name) {
  if (name == "f") return SweepParam::f;
  if (name == "g") return SweepParam::g;
  if (name == "omega") return SweepParam::omega;
  if (name == "omega_ratio") return SweepParam::omega_ratio;
  throw ScenarioError("unknown sweep parameter '" + std::string(name) + "'");
}

std::string_view to_string(SweepParam param) {
  switch (param) {
    case SweepParam::f: return "f";
    case SweepParam::g: return "g";
    case SweepParam::omega: return "omega";
    case SweepParam::omega_ratio: return "omega_ratio";
  }
  return "f";
}

std::vector<SweepRow> sweep(const Scenario& base, SweepParam param, const std::vector<double>& values,
                            unsigned threads) {
  if (values.size() < 2) throw ScenarioError("sweep needs at least two points");
  std::vector<SweepRow> rows(values.size());

  auto evaluate = [&](std::size_t i) {
    SweepRow& row = rows[i];
    row.value = values[i];
    try {
      Scenario sc = base;
      sc.outputs.grid_times.clear();
      sc.outputs.averages = true;
      switch (param) {
        case SweepParam::f: sc.drive.f = values[i]; break;
        case SweepParam::g: sc.g = values[i]; break;
        case SweepParam::omega:
          sc.drive.omega = values[i];
          sc.drive.omega_ratio.reset();
          break;
        case SweepParam::omega_ratio:
          sc.drive.omega_ratio = values[i];
          sc.drive.omega.reset();
          break;
      }
      const auto res = run_scenario(sc);
      for (const auto& avg : res.averages) {
        if (avg.method == Method::rwa) row.rwa_closed_form = avg.closed_form;
        if (avg.method == Method::exact) row.exact_means = std::make_pair(avg.corr_sq_mean, avg.conc_sq_mean);
      }
    } catch (const NumericError& e) {
      row.ok = false;
      row.numeric_failure = true;
      row.error = e.what();
    } catch (const std::exception& e) {
      row.ok = false;
      row.error = e.what();
    }
  };

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = std::min<unsigned>(threads == 0 ? hw : threads, static_cast<unsigned>(values.size()));
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < values.size(); i = next++) evaluate(i);
    });
  }
  pool.clear();
  return rows;
}

}  // namespace razavy
