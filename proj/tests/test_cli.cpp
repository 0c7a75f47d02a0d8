#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
};

Outcome run_cli(const std::string& args) {
  const std::string cmd = std::string(RAZAVY_CLI_PATH) + " " + args + " 2>/dev/null";
  Outcome o;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) o.out.append(buf.data(), n);
  const int status = pclose(pipe);
  o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return o;
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("razavy_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

fs::path write_file(const fs::path& dir, const std::string& name, const std::string& text) {
  const auto p = dir / name;
  std::ofstream(p) << text;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

const std::string kScenarios = RAZAVY_SCENARIO_DIR;

const char* kSmall = R"([system]
g = 0.01
[drive]
kind = "sinusoidal-symmetric"
f = 0.01
omega_ratio = 1.0
[run]
t_max = 20
methods = ["exact", "rwa"]
[outputs]
series = ["populations"]
averages = true
)";

}  // namespace

TEST_CASE("eigen prints the constants") {
  const auto o = run_cli("eigen --g 0.01");
  CHECK(o.code == 0);
  CHECK(o.out.find("delta10 0.0743109\n") != std::string::npos);
  CHECK(o.out.find("gamma 1.13823\n") != std::string::npos);
  CHECK(o.out.find("eps0 -4.73205\n") != std::string::npos);

  const auto zero = run_cli("eigen --g 0");
  CHECK(zero.code == 0);
  CHECK(zero.out.find("theta 0\n") != std::string::npos);

  const auto strong = run_cli("eigen --g 0.2");
  CHECK(strong.out.find("delta10 0.0139935\n") != std::string::npos);

  CHECK(run_cli("eigen --g -1").code == 3);
  CHECK(run_cli("eigen --g 0.1 --xi 0").code == 3);
  CHECK(run_cli("eigen").code == 2);
  CHECK(run_cli("eigen --g abc").code == 2);
}

TEST_CASE("run writes artifacts deterministically") {
  const auto dir = scratch("run");
  const auto file = write_file(dir, "small.toml", kSmall);
  const auto a = dir / "a";
  const auto b = dir / "b";
  CHECK(run_cli("--quiet --machine run " + file.string() + " --out " + a.string()).code == 0);
  CHECK(run_cli("--quiet --machine run " + file.string() + " --out " + b.string()).code == 0);
  for (const char* name : {"small_exact.csv", "small_rwa.csv", "small_averages.json"}) {
    CAPTURE(name);
    REQUIRE(fs::exists(a / name));
    CHECK(slurp(a / name) == slurp(b / name));
  }
  const auto text = slurp(a / "small_exact.csv");
  CHECK(text.rfind("t,p0,p1,p2,p3,x1,x2,x_sum,gamma,conc\n", 0) == 0);
  fs::remove_all(dir);
}

TEST_CASE("bundled fig7 scenario writes four grids") {
  const auto dir = scratch("fig7");
  CHECK(run_cli("--quiet run " + kScenarios + "/fig7.toml --out " + dir.string()).code == 0);
  for (const char* name : {"fig7_grid_t0.json", "fig7_grid_t100.json", "fig7_grid_t200.json", "fig7_grid_t300.json"}) {
    CHECK(fs::exists(dir / name));
  }
  fs::remove_all(dir);
}

TEST_CASE("exit codes for bad scenarios") {
  const auto dir = scratch("errors");
  std::string text = kSmall;
  CHECK(run_cli("run " + write_file(dir, "syntax.toml", text + "bogus line\n").string()).code == 2);
  CHECK(run_cli("run " + write_file(dir, "unknown.toml", text + "colour = 1\n").string()).code == 2);
  CHECK(run_cli("run " + (dir / "missing.toml").string()).code == 2);

  std::string none = text;
  none.replace(none.find("[\"exact\", \"rwa\"]"), 16, "[]");
  CHECK(run_cli("run " + write_file(dir, "none.toml", none).string() + " --out " + dir.string()).code == 3);

  CHECK(run_cli("run " + write_file(dir, "coarse.toml", text + "grid_times = [0]\ngrid_points = 5\n").string() +
                " --out " + dir.string())
            .code == 4);
  CHECK(run_cli("frobnicate").code == 2);
  fs::remove_all(dir);
}

TEST_CASE("sweep subcommand") {
  const auto dir = scratch("sweep");
  std::string base = kSmall;
  base.replace(base.find("[\"exact\", \"rwa\"]"), 16, "[\"rwa\"]");
  const auto file = write_file(dir, "base.toml", base);

  const auto g = run_cli("sweep " + file.string() + " --param g --values 0.01,0.1,0.2");
  CHECK(g.code == 0);
  std::istringstream in(g.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "g,status,corr_sq_rwa,conc_sq_rwa,corr_sq_exact,conc_sq_exact");
  const char* expected[] = {"3.83265e-01", "6.34747e-01", "7.12556e-01"};
  for (const char* e : expected) {
    REQUIRE(std::getline(in, line));
    CHECK(line.find(std::string(",ok,5.00000e-01,") + e + ",,") != std::string::npos);
  }

  const auto f = run_cli("sweep " + file.string() + " --param f --from 0.005 --to 0.02 --steps 4");
  CHECK(f.code == 0);
  std::istringstream fin(f.out);
  std::getline(fin, line);
  int rows = 0;
  while (std::getline(fin, line)) {
    CHECK(line.find(",ok,5.00000e-01,3.83265e-01,,") != std::string::npos);
    ++rows;
  }
  CHECK(rows == 4);

  CHECK(run_cli("sweep " + file.string() + " --param g --from 0 --to 1 --steps 0").code == 3);
  CHECK(run_cli("sweep " + file.string() + " --param g --values 0.1").code == 3);
  CHECK(run_cli("sweep " + file.string() + " --param xi --values 1,2").code == 3);

  const auto partial = run_cli("sweep " + file.string() + " --param g --values 0.01,-1");
  CHECK(partial.code == 3);
  CHECK(partial.out.find("failed") != std::string::npos);
  CHECK(partial.out.find(",ok,") != std::string::npos);
  fs::remove_all(dir);
}
