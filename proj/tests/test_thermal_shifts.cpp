#include <doctest.h>

#include <array>
#include <cmath>
#include <vector>

#include "fermipair/thermal_shifts.hpp"

using namespace fermipair;

namespace {

// 14-digit quadrature references for x = 1 (mu solved through the complete
// Fermi-Dirac integral).
constexpr double kDeltaF002 = -1.485275e-4;
constexpr double kPrefactor = -0.37155196489176145478;  // (pi^2/8)(cos 1 - sin 1)
constexpr double kFirstOrderSlope = 3.8691539261061891508;  // 6 f0/(2 - f0^2)^2

}  // namespace

TEST_CASE("delta_f_numeric vanishes at T = 0 and at contact") {
  CHECK(std::abs(delta_f_numeric(0.7, 0.0)) <= 1e-8);
  CHECK(std::abs(delta_f_numeric(3.0, 0.0)) <= 1e-8);
  CHECK(std::abs(delta_f_numeric(0.0, 0.1)) <= 1e-8);
}

TEST_CASE("delta_f_numeric magnitude at x = 1") {
  const double df = delta_f_numeric(1.0, 0.02);
  CHECK(df == doctest::Approx(kDeltaF002).epsilon(1e-3));
  CHECK(df < 0.0);
}

TEST_CASE("delta_f ratio converges to the Sommerfeld prefactor") {
  const double r05 = delta_f_numeric(1.0, 0.05) / 0.0025;
  const double r02 = delta_f_numeric(1.0, 0.02) / 0.0004;
  CHECK(std::abs(r05 - kPrefactor) <= 0.05 * std::abs(kPrefactor));
  CHECK(std::abs(r02 - kPrefactor) <= 0.01 * std::abs(kPrefactor));
}

TEST_CASE("delta_concurrence branches") {
  CHECK(std::abs(delta_concurrence(1.0, 0.0, ShiftMethod::numeric)) <= 1e-8);
  CHECK(std::abs(delta_concurrence(1.0, 0.0, ShiftMethod::first_order)) <= 1e-8);

  const ThermalState th = solve_chemical_potential(0.02);
  const double dc_first =
      delta_concurrence(1.0, th, ShiftMethod::first_order, {});
  CHECK(dc_first ==
        doctest::Approx(kFirstOrderSlope * kDeltaF002).epsilon(2e-3));
  const double dc_numeric = delta_concurrence(1.0, th, ShiftMethod::numeric, {});
  CHECK(dc_numeric < 0.0);
  CHECK(std::abs(dc_numeric - dc_first) <= 1e-5);
}

TEST_CASE("first-order concurrence remainder is quadratic in delta_f") {
  const QuadratureSpec tight{1e-12, 1e-12, 44};
  std::array<double, 3> ts = {0.01, 0.02, 0.04};
  std::array<double, 3> remainder{};
  std::array<double, 3> df{};
  for (size_t i = 0; i < ts.size(); ++i) {
    const ThermalState th = solve_chemical_potential(ts[i]);
    df[i] = delta_f_numeric(1.0, th, tight);
    remainder[i] =
        std::abs(delta_concurrence(1.0, th, ShiftMethod::numeric, tight) -
                 delta_concurrence(1.0, th, ShiftMethod::first_order, tight));
  }
  for (size_t i = 0; i + 1 < ts.size(); ++i) {
    const double measured = remainder[i + 1] / remainder[i];
    const double quadratic = (df[i + 1] / df[i]) * (df[i + 1] / df[i]);
    CHECK(measured >= 0.5 * quadratic);
    CHECK(measured <= 2.0 * quadratic);
  }
}

TEST_CASE("delta_relative_entropy") {
  CHECK(std::abs(delta_relative_entropy(1.0, 0.0)) <= 1e-8);
  CHECK(delta_relative_entropy(1.0, 0.05) < 0.0);
  // f(3, 0)^2 = 0.119 keeps both fidelities below 1/2, so E_RE stays pinned
  CHECK(delta_relative_entropy(3.0, 0.1) == 0.0);
}

TEST_CASE("shift signs at x = 1 for moderate temperatures") {
  for (double t : {0.05, 0.1, 0.2}) {
    const ThermalState th = solve_chemical_potential(t);
    CHECK(delta_f_numeric(1.0, th, {}) < 0.0);
    CHECK(delta_concurrence(1.0, th, ShiftMethod::numeric, {}) < 0.0);
    CHECK(delta_relative_entropy(1.0, th, {}) < 0.0);
  }
}

TEST_CASE("shift_record bundles the three deltas") {
  const ShiftRecord record = shift_record(1.0, 0.05, ShiftMethod::numeric);
  CHECK(record.x == 1.0);
  CHECK(record.t_rel == 0.05);
  CHECK(record.delta_f < 0.0);
  CHECK(record.delta_c < 0.0);
  CHECK(record.delta_ere < 0.0);
}

TEST_CASE("power_law_exponent recovers an exact power law") {
  const std::vector<double> ts = {0.01, 0.02, 0.03, 0.04, 0.05};
  std::vector<double> quadratic, cubic;
  for (double t : ts) {
    quadratic.push_back(t * t);
    cubic.push_back(-2.0 * t * t * t);
  }
  CHECK(power_law_exponent(ts, quadratic) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(power_law_exponent(ts, cubic) == doctest::Approx(3.0).epsilon(1e-12));

  CHECK_THROWS_AS(power_law_exponent(std::vector<double>{0.1, 0.2},
                                     std::vector<double>{1.0, 2.0}),
                  DegenerateFitError);
  CHECK_THROWS_AS(power_law_exponent(ts, std::vector<double>{0.0, 1, 1, 1, 1}),
                  DegenerateFitError);
  CHECK_THROWS_AS(power_law_exponent(std::vector<double>{-1, 1, 2},
                                     std::vector<double>{1, 1, 1}),
                  DegenerateFitError);
}

TEST_CASE("low-temperature shifts scale as T^2") {
  const std::vector<double> grid = {0.01, 0.02, 0.03, 0.04, 0.05};
  for (ShiftQuantity q : {ShiftQuantity::f, ShiftQuantity::c, ShiftQuantity::ere}) {
    const double exponent = scaling_exponent(1.0, grid, q);
    CHECK(exponent >= 1.9);
    CHECK(exponent <= 2.1);
  }
}
