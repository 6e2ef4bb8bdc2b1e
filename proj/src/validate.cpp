#include "fermipair/validate.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "fermipair/dataset.hpp"
#include "fermipair/measures.hpp"
#include "fermipair/spin_state.hpp"
#include "fermipair/thermal_shifts.hpp"

namespace fermipair {

namespace {

CheckResult check_normalization(bool quick) {
  const std::vector<double> temps =
      quick ? std::vector<double>{0.0, 0.1}
            : std::vector<double>{0.0, 0.05, 0.1, 0.2};
  double worst = 0.0, worst_t = 0.0;
  for (double t : temps) {
    const ThermalState th = solve_chemical_potential(t);
    const double dev = std::abs(f_finite_t(0.0, th).f - 1.0);
    if (dev > worst) {
      worst = dev;
      worst_t = t;
    }
  }
  return {"pair function normalization f(0, T) = 1", worst <= 1e-8,
          "max |f(0,T) - 1| = " + format_double(worst) + " at T/T_F = " +
              format_double(worst_t) + " (limit 1e-8)"};
}

CheckResult check_zero_t_consistency() {
  const ThermalState cold{0.0, 1.0};
  double worst = 0.0, worst_x = 0.0;
  for (double x : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
    const double dev =
        std::abs(f_finite_t(x, cold).f - f_zero_t(x, Dimension::Three).f);
    if (dev > worst) {
      worst = dev;
      worst_x = x;
    }
  }
  return {"zero-T quadrature matches the Bessel closed form", worst <= 1e-8,
          "max deviation " + format_double(worst) + " at x = " +
              format_double(worst_x) + " (limit 1e-8)"};
}

CheckResult check_mu_residual(bool quick) {
  const std::vector<double> temps =
      quick ? std::vector<double>{0.1} : std::vector<double>{0.05, 0.1, 0.2};
  double worst = 0.0, worst_t = 0.0;
  for (double t : temps) {
    const double res = normalization_residual(solve_chemical_potential(t));
    if (res > worst) {
      worst = res;
      worst_t = t;
    }
  }
  return {"chemical potential normalization residual", worst <= 1e-10,
          "max residual " + format_double(worst) + " at T/T_F = " +
              format_double(worst_t) + " (limit 1e-10)"};
}

CheckResult check_werner_oracles(bool quick) {
  const int n = quick ? 100 : 500;
  std::mt19937 rng(20240817u);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  double worst_c = 0.0, worst_i = 0.0;
  bool flags_agree = true;
  for (int k = 0; k < n; ++k) {
    const double f2 = uniform(rng);
    const TwoSpinDensityMatrix rho = density_matrix(werner_from_f2(f2));
    worst_c = std::max(
        worst_c, std::abs(wootters_concurrence(rho) - concurrence_closed(f2)));
    const double fidelity = werner_from_f2(f2).fidelity;
    worst_i = std::max(worst_i, std::abs((2.0 - von_neumann_entropy(rho)) -
                                         mutual_information(fidelity)));
    if (std::abs(f2 - 0.5) > 1e-9 &&
        is_entangled_ppt(rho) != (f2 > 0.5))
      flags_agree = false;
  }
  const bool passed = worst_c <= 1e-10 && worst_i <= 1e-10 && flags_agree;
  return {"closed forms match the matrix oracles", passed,
          "concurrence dev " + format_double(worst_c) + ", mutual info dev " +
              format_double(worst_i) + " over " + std::to_string(n) +
              " samples (limit 1e-10); PPT flag " +
              (flags_agree ? "consistent" : "INCONSISTENT")};
}

CheckResult check_sum_rule(bool quick) {
  const ThermalState cold{0.0, 1.0};
  const double res50 = sum_rule_residual(cold, 50.0, 25);
  bool passed = std::abs(res50) < 2e-2;
  std::string detail =
      "residual " + format_double(res50) + " at x_max = 50 (limit 2e-2)";
  if (!quick) {
    const double res200 = sum_rule_residual(cold, 200.0, 100);
    passed = passed && std::abs(res200) < 5e-3;
    detail += ", " + format_double(res200) + " at x_max = 200 (limit 5e-3)";
  }
  return {"pair-function sum rule", passed, detail};
}

CheckResult check_thresholds() {
  // The concurrence and the PPT eigenvalue must vanish at the same
  // separation, where f^2 crosses 1/2.
  auto f2_of = [](double x) { return f_zero_t(x, Dimension::Three).f *
                                     f_zero_t(x, Dimension::Three).f; };
  const double root_c = find_root(
      [&](double x) { return f2_of(x) - 0.5; }, 1.0, 3.0, 1e-9);
  const double root_ppt = find_root(
      [&](double x) {
        return eigen_sym4(partial_transpose(density_matrix(
                              werner_from_f2(f2_of(x)))))
            .values[3];
      },
      1.0, 3.0, 1e-9);
  const double gap = std::abs(root_c - root_ppt);
  const Classification below = classify(kBellThresholdF2 - 1e-9);
  const Classification above = classify(kBellThresholdF2 + 1e-9);
  const bool bell_ok = !below.bell_violating && above.bell_violating &&
                       below.entangled && above.entangled;
  return {"entanglement thresholds", gap <= 1e-6 && bell_ok,
          "extinction at x = " + format_double(root_c) +
              ", concurrence vs PPT gap " + format_double(gap) +
              " (limit 1e-6); Bell boundary " +
              (bell_ok ? "consistent" : "INCONSISTENT")};
}

CheckResult check_additive_split() {
  double worst = 0.0;
  for (int k = 0; k <= 200; ++k) {
    const double f2 = k / 200.0;
    const MeasureSet ms = measure_set(f2);
    worst = std::max(worst, std::abs(ms.mutual_info -
                                     (ms.e_re + ms.classical_corr)));
  }
  return {"mutual information splits into E_RE plus classical", worst <= 1e-12,
          "max |I - (E_RE + C_cl)| = " + format_double(worst) +
              " (limit 1e-12)"};
}

CheckResult check_sommerfeld_shift() {
  const double target = delta_f_sommerfeld(1.0, 1.0);  // prefactor at x = 1
  const double r05 =
      std::abs(delta_f_numeric(1.0, 0.05) / 0.0025 - target) / std::abs(target);
  const double r02 =
      std::abs(delta_f_numeric(1.0, 0.02) / 0.0004 - target) / std::abs(target);
  return {"thermal shift matches the Sommerfeld form", r05 < 0.05 && r02 < 0.01,
          "relative deviation " + format_double(r05) +
              " at T/T_F = 0.05 (limit 0.05), " + format_double(r02) +
              " at 0.02 (limit 0.01)"};
}

CheckResult check_scaling_exponents() {
  const std::vector<double> grid = {0.01, 0.02, 0.03, 0.04, 0.05};
  std::string detail;
  bool passed = true;
  const std::pair<ShiftQuantity, const char*> quantities[] = {
      {ShiftQuantity::f, "f"}, {ShiftQuantity::c, "C"},
      {ShiftQuantity::ere, "E_RE"}};
  for (const auto& [quantity, name] : quantities) {
    const double exponent = scaling_exponent(1.0, grid, quantity);
    passed = passed && exponent >= 1.9 && exponent <= 2.1;
    if (!detail.empty()) detail += ", ";
    detail += std::string(name) + ": " + format_double(exponent);
  }
  return {"low-temperature shifts scale as T^2", passed,
          detail + " (required within [1.9, 2.1])"};
}

}  // namespace

std::vector<CheckResult> run_validation(bool quick) {
  std::vector<CheckResult> results;
  results.push_back(check_normalization(quick));
  results.push_back(check_zero_t_consistency());
  results.push_back(check_mu_residual(quick));
  results.push_back(check_werner_oracles(quick));
  results.push_back(check_sum_rule(quick));
  results.push_back(check_thresholds());
  results.push_back(check_additive_split());
  if (!quick) {
    results.push_back(check_sommerfeld_shift());
    results.push_back(check_scaling_exponents());
  }
  return results;
}

}  // namespace fermipair
