#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "razavy/drive.hpp"
#include "razavy/errors.hpp"

using namespace razavy;

TEST_CASE("field values at reference times") {
  auto sym = DriveField::sinusoidal_symmetric(0.01, 0.07431);
  CHECK(eval_field(sym, 0.0).first == 0.0);
  CHECK(eval_field(sym, 0.0).second == 0.0);

  auto step = DriveField::step_symmetric(0.05);
  CHECK(eval_field(step, 10.0).first == 0.05);
  CHECK(eval_field(step, 10.0).second == 0.05);
  CHECK(eval_field(step, 0.0).first == 0.05);

  const double omega = 0.3;
  auto first = DriveField::sinusoidal_first_well(0.02, omega);
  const auto peak = eval_field(first, std::numbers::pi / (2.0 * omega));
  CHECK(peak.first == doctest::Approx(0.02).epsilon(1e-15));
  CHECK(peak.second == 0.0);

  const auto none = eval_field(DriveField::none(), 5.0);
  CHECK(none.first == 0.0);
  CHECK(none.second == 0.0);
}

TEST_CASE("symmetry of the drive kinds") {
  auto anti = DriveField::sinusoidal_antisymmetric(0.03, 0.1);
  auto sym = DriveField::sinusoidal_symmetric(0.03, 0.1);
  auto step = DriveField::step_symmetric(0.02);
  for (int k = 0; k < 200; ++k) {
    const double t = 0.37 * k;
    const auto a = eval_field(anti, t);
    CHECK(a.first + a.second == 0.0);
    const auto s = eval_field(sym, t);
    CHECK(s.first - s.second == 0.0);
    const auto st = eval_field(step, t);
    CHECK(st.first - st.second == 0.0);
    CHECK(std::isfinite(a.first));
  }
}

TEST_CASE("general per-well shapes") {
  const auto drive = DriveField::general(ParametricField{ShapeKind::cosine, 0.1, 2.0},
                                         SampledField{{0.0, 1.0, 3.0}, {0.0, 2.0, -2.0}});
  CHECK_NOTHROW(validate(drive));
  CHECK(eval_field(drive, 0.0).first == doctest::Approx(0.1));
  CHECK(eval_field(drive, 0.5).second == doctest::Approx(1.0));
  CHECK(eval_field(drive, 2.0).second == doctest::Approx(0.0));
  CHECK(eval_field(drive, -1.0).second == 0.0);
  CHECK(eval_field(drive, 10.0).second == -2.0);
  CHECK(peak_field(drive) == doctest::Approx(2.1));
  CHECK(fastest_frequency(drive) == doctest::Approx(std::numbers::pi));
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(validate(DriveField::sinusoidal_symmetric(-0.01, 0.1)), ScenarioError);
  CHECK_THROWS_AS(validate(DriveField::sinusoidal_symmetric(0.01, 0.0)), ScenarioError);
  CHECK_THROWS_AS(validate(DriveField::sinusoidal_first_well(0.01, -1.0)), ScenarioError);
  CHECK_NOTHROW(validate(DriveField::step_symmetric(0.0)));
  CHECK_THROWS_AS(validate(DriveField::general(SampledField{{0.0, 0.0}, {1.0, 2.0}}, ParametricField{})),
                  ScenarioError);
  CHECK_THROWS_AS(validate(DriveField::general(SampledField{{0.0}, {}}, ParametricField{})),
                  ScenarioError);
  CHECK_THROWS_AS(validate(DriveField::general(ParametricField{ShapeKind::sine, 1.0, 0.0},
                                               ParametricField{})),
                  ScenarioError);
}

TEST_CASE("kind names round trip") {
  for (auto kind : {DriveKind::none, DriveKind::sinusoidal_symmetric, DriveKind::step_symmetric,
                    DriveKind::sinusoidal_antisymmetric, DriveKind::sinusoidal_first_well,
                    DriveKind::general}) {
    CHECK(drive_kind_from_string(to_string(kind)) == kind);
  }
  CHECK_THROWS_AS(drive_kind_from_string("square"), ParseError);
}

TEST_CASE("peak and frequency bounds") {
  auto sym = DriveField::sinusoidal_symmetric(0.02, 0.5);
  CHECK(peak_field(sym) == doctest::Approx(0.04));
  CHECK(fastest_frequency(sym) == 0.5);
  CHECK(fastest_frequency(DriveField::step_symmetric(0.1)) == 0.0);
  CHECK(peak_field(DriveField::sinusoidal_first_well(0.02, 0.5)) == doctest::Approx(0.02));
}
