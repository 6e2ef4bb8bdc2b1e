#pragma once

#include "fermipair/numerics.hpp"

namespace fermipair {

// Spatial dimension of the gas. Three uses k_F = (3 pi^2 N/V)^{1/3},
// Two uses k_F = sqrt(2 pi n). Finite temperature is supported in 3D only.
enum class Dimension { Two, Three };

// Reduced temperature T/T_F together with the matched reduced chemical
// potential mu/eps_F. Always construct through solve_chemical_potential so
// the density (hence k_F and T_F) stays temperature independent; t_rel = 0
// pins mu_rel = 1 (filled Fermi sea).
struct ThermalState {
  double t_rel = 0.0;
  double mu_rel = 1.0;
};

enum class PairMethod { analytic_T0, quadrature, sommerfeld_shifted };

// One sample of the pair function f at dimensionless separation x = k_F r.
struct PairFunctionValue {
  double x;
  double f;
  PairMethod method;
};

// Mean occupation of a state with energy eps = energy_rel * eps_F. At
// t_rel = 0 this is the step theta(mu - energy) with value 1/2 at the edge;
// otherwise the Fermi-Dirac factor, evaluated overflow safe.
double occupation(double energy_rel, const ThermalState& thermal);

// Solve (3/2) Integral_0^inf sqrt(u) n(u; mu, t) du = 1 for mu/eps_F. The
// normalization fixes the density so that f(0, T) = 1 at every temperature.
ThermalState solve_chemical_potential(double t_rel);

// |(3/2) Integral sqrt(u) n du - 1| recomputed at tightened tolerance;
// diagnostic for the chemical-potential solve.
double normalization_residual(const ThermalState& thermal);

// Zero-temperature pair function: 3 j1(x)/x in 3D, 2 J1(x)/x in 2D, with
// the limit value 1 at x = 0.
PairFunctionValue f_zero_t(double x, Dimension dim);

// Finite-temperature pair function (3D),
//   f(x, T) = (3 / 2x) Integral_0^inf sin(x sqrt(u)) n(u) du.
// The range [0, u_max] is split at the sine zeros u_n = (n pi / x)^2 and each
// panel integrated adaptively; u_max = mu + t ln(1e12) truncates occupations
// below 1e-12. x < 1e-6 switches to the limiting integrand (3/2) sqrt(u) n(u).
// At t_rel = 0 the occupation truncates the range to [0, 1] exactly.
PairFunctionValue f_finite_t(double x, const ThermalState& thermal,
                             const QuadratureSpec& spec = {});

// Leading low-temperature shift of the pair function at x = k_F r,
//   delta_f = (pi^2/8) [cos x - sin(x)/x] (T/T_F)^2.
double delta_f_sommerfeld(double x, double t_rel);

// Zero-T pair function plus the closed-form thermal shift above.
PairFunctionValue f_sommerfeld_shifted(double x, double t_rel);

// (2 / 3pi) Integral_0^{x_max} u^2 f(u)^2 du - 1, the dimensionless 3D form
// of the normalization sum rule Integral f^2 d^3r = 2V/N. The truncation tail
// decays like 1/x_max. [0, x_max] is pre-split into n_panels equal panels to
// help the adaptive rule with the oscillatory integrand.
double sum_rule_residual(const ThermalState& thermal, double x_max,
                         int n_panels);

}  // namespace fermipair
