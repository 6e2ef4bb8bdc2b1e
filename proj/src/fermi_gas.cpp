#include "fermipair/fermi_gas.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fermipair {

namespace {

// ln(1e12): occupations below 1e-12 are treated as zero when truncating
// semi-infinite energy integrals.
constexpr double kOccupationCutoffLog = 27.631021115928547;

double upper_energy_cutoff(const ThermalState& thermal) {
  if (thermal.t_rel == 0.0) return 1.0;
  return std::max(1.0, thermal.mu_rel + thermal.t_rel * kOccupationCutoffLog);
}

double normalization_minus_one(double mu_rel, double t_rel,
                               const QuadratureSpec& spec) {
  const ThermalState ts{t_rel, mu_rel};
  const double u_max = upper_energy_cutoff(ts);
  const double value = integrate(
      [&](double u) { return 1.5 * std::sqrt(u) * occupation(u, ts); }, 0.0,
      u_max, spec);
  return value - 1.0;
}

}  // namespace

double occupation(double energy_rel, const ThermalState& thermal) {
  if (thermal.t_rel == 0.0) {
    if (energy_rel < thermal.mu_rel) return 1.0;
    if (energy_rel > thermal.mu_rel) return 0.0;
    return 0.5;
  }
  const double z = (energy_rel - thermal.mu_rel) / thermal.t_rel;
  if (z >= 0.0) {
    const double w = std::exp(-z);
    return w / (1.0 + w);
  }
  return 1.0 / (1.0 + std::exp(z));
}

ThermalState solve_chemical_potential(double t_rel) {
  if (t_rel < 0.0)
    throw std::domain_error("solve_chemical_potential: t_rel must be >= 0");
  if (t_rel == 0.0) return {0.0, 1.0};

  const QuadratureSpec spec{1e-12, 1e-12, 44};
  auto residual = [&](double mu) {
    return normalization_minus_one(mu, t_rel, spec);
  };

  // mu(T) < 1 at fixed density, so 1 always brackets from above; walk the
  // lower end out until the residual turns negative.
  const double hi = 1.0;
  double lo = 1.0 - std::max(0.5, 8.0 * t_rel);
  for (int i = 0; i < 100 && residual(lo) > 0.0; ++i) lo = 1.0 - 2.0 * (1.0 - lo);

  const RootBracket bracket = find_root_bracket(residual, lo, hi, 1e-12);
  return {t_rel, bracket.midpoint()};
}

double normalization_residual(const ThermalState& thermal) {
  const QuadratureSpec tight{1e-13, 1e-13, 48};
  return std::abs(normalization_minus_one(thermal.mu_rel, thermal.t_rel, tight));
}

PairFunctionValue f_zero_t(double x, Dimension dim) {
  if (x == 0.0) return {0.0, 1.0, PairMethod::analytic_T0};
  const double f = (dim == Dimension::Three) ? 3.0 * spherical_j1(x) / x
                                             : 2.0 * bessel_j1(x) / x;
  return {x, f, PairMethod::analytic_T0};
}

PairFunctionValue f_finite_t(double x, const ThermalState& thermal,
                             const QuadratureSpec& spec) {
  if (x < 0.0) throw std::domain_error("f_finite_t: x must be >= 0");
  const double u_max = upper_energy_cutoff(thermal);
  const bool zero_t = thermal.t_rel == 0.0;

  // sin(x sqrt(u))/x degenerates at small x; the limiting integrand is the
  // density normalization itself.
  if (x < 1e-6) {
    auto limit_integrand = [&](double u) {
      return 1.5 * std::sqrt(u) * (zero_t ? 1.0 : occupation(u, thermal));
    };
    return {x, integrate(limit_integrand, 0.0, u_max, spec),
            PairMethod::quadrature};
  }

  auto integrand = [&](double u) {
    const double s = std::sin(x * std::sqrt(u));
    return zero_t ? s : s * occupation(u, thermal);
  };

  // One panel per sine lobe: zeros of sin(x sqrt(u)) sit at u_n = (n pi/x)^2.
  double total = 0.0;
  double lo = 0.0;
  for (int n = 1;; ++n) {
    const double z = static_cast<double>(n) * std::numbers::pi / x;
    const double u_n = z * z;
    if (u_n >= u_max) break;
    total += integrate(integrand, lo, u_n, spec);
    lo = u_n;
  }
  total += integrate(integrand, lo, u_max, spec);
  return {x, 1.5 / x * total, PairMethod::quadrature};
}

double delta_f_sommerfeld(double x, double t_rel) {
  const double sinc = (x == 0.0) ? 1.0 : std::sin(x) / x;
  return std::numbers::pi * std::numbers::pi / 8.0 * (std::cos(x) - sinc) *
         t_rel * t_rel;
}

PairFunctionValue f_sommerfeld_shifted(double x, double t_rel) {
  const double f = f_zero_t(x, Dimension::Three).f + delta_f_sommerfeld(x, t_rel);
  return {x, f, PairMethod::sommerfeld_shifted};
}

double sum_rule_residual(const ThermalState& thermal, double x_max,
                         int n_panels) {
  if (!(x_max > 0.0))
    throw std::domain_error("sum_rule_residual: x_max must be > 0");
  if (n_panels < 1)
    throw std::domain_error("sum_rule_residual: n_panels must be >= 1");

  auto integrand = [&](double u) {
    const double f = (thermal.t_rel == 0.0)
                         ? f_zero_t(u, Dimension::Three).f
                         : f_finite_t(u, thermal).f;
    return u * u * f * f;
  };
  double total = 0.0;
  for (int k = 0; k < n_panels; ++k) {
    const double a = x_max * k / n_panels;
    const double b = x_max * (k + 1) / n_panels;
    total += integrate(integrand, a, b);
  }
  return 2.0 / (3.0 * std::numbers::pi) * total - 1.0;
}

}  // namespace fermipair
