#include "fermipair/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace fermipair {

namespace {

std::string depth_message(double best, double lo, double hi) {
  return "integrate: max_depth reached on panel [" + std::to_string(lo) +
         ", " + std::to_string(hi) + "], best estimate " + std::to_string(best);
}

}  // namespace

QuadratureDepthError::QuadratureDepthError(double best_estimate,
                                           double panel_lo, double panel_hi)
    : std::runtime_error(depth_message(best_estimate, panel_lo, panel_hi)),
      best_(best_estimate),
      lo_(panel_lo),
      hi_(panel_hi) {}

NoBracketError::NoBracketError(double lo, double hi)
    : std::runtime_error("find_root: no sign change on [" + std::to_string(lo) +
                         ", " + std::to_string(hi) + "]") {}

NotPsdError::NotPsdError(double min_eigenvalue)
    : std::runtime_error("matrix is not positive semidefinite (min eigenvalue " +
                         std::to_string(min_eigenvalue) + ")"),
      min_eig_(min_eigenvalue) {}

namespace detail {

double spherical_j1_series(double x) {
  // j1(x) = x/3 - x^3/30 + x^5/840 - ...; successive terms carry the
  // factor -x^2 / (2k (2k + 3)).
  const double x2 = x * x;
  double term = x / 3.0;
  double sum = term;
  for (int k = 1; k < 16; ++k) {
    term *= -x2 / ((2.0 * k) * (2.0 * k + 3.0));
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

double spherical_j1_closed(double x) {
  return std::sin(x) / (x * x) - std::cos(x) / x;
}

double bessel_j1_series(double x) {
  // J1(x) = (x/2) sum_m (-x^2/4)^m / (m! (m+1)!)
  const double q = -0.25 * x * x;
  double term = 0.5 * x;
  double sum = term;
  for (int m = 1; m <= 60; ++m) {
    term *= q / (static_cast<double>(m) * (m + 1.0));
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

double bessel_j1_asymptotic(double x) {
  // Hankel expansion J1 = sqrt(2/(pi x)) [P cos(chi) - Q sin(chi)] with
  // chi = x - 3 pi / 4 and the signed coefficients
  // a_k = a_{k-1} (4 - (2k-1)^2) / (8 k). Terms are accumulated until they
  // stop decreasing, which keeps the divergent tail out of the sum.
  double p_sum = 0.0;
  double q_sum = 0.0;
  double a = 1.0;
  double inv_xk = 1.0;
  double last = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 40; ++k) {
    if (k > 0) {
      const double odd = 2.0 * k - 1.0;
      a *= (4.0 - odd * odd) / (8.0 * k);
      inv_xk /= x;
    }
    const double t = a * inv_xk;
    if (std::abs(t) >= last) break;
    last = std::abs(t);
    const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 0) {
      p_sum += sign * t;
    } else {
      q_sum += sign * t;
    }
    if (std::abs(t) < 1e-19) break;
  }
  const double chi = x - 0.75 * std::numbers::pi;
  return std::sqrt(2.0 / (std::numbers::pi * x)) *
         (p_sum * std::cos(chi) - q_sum * std::sin(chi));
}

}  // namespace detail

double spherical_j1(double x) {
  // The closed form loses ~1e-12 of relative accuracy to cancellation below
  // |x| = 0.1; the series takes over there and removes the 0/0 at the origin.
  if (std::abs(x) < 0.1) return detail::spherical_j1_series(x);
  return detail::spherical_j1_closed(x);
}

double bessel_j1(double x) {
  if (x < 0.0) return -bessel_j1(-x);  // J1 is odd
  if (x <= 12.0) return detail::bessel_j1_series(x);
  return detail::bessel_j1_asymptotic(x);
}

double xlog2(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

double binary_entropy(double x) {
  if (x < -1e-12 || x > 1.0 + 1e-12)
    throw std::domain_error("binary_entropy: argument " + std::to_string(x) +
                            " outside [0, 1]");
  x = std::clamp(x, 0.0, 1.0);
  return -xlog2(x) - xlog2(1.0 - x);
}

namespace {

double simpson(double h, double fa, double fm, double fb) {
  return h / 6.0 * (fa + 4.0 * fm + fb);
}

double refine_panel(const std::function<double(double)>& f, double a, double b,
                    double fa, double fm, double fb, double estimate,
                    const QuadratureSpec& spec, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(m - a, fa, flm, fm);
  const double right = simpson(b - m, fm, frm, fb);
  const double refined = left + right;
  const double err = (refined - estimate) / 15.0;
  if (std::abs(err) <= std::max(spec.abs_tol, spec.rel_tol * std::abs(refined)))
    return refined + err;
  if (depth + 1 >= spec.max_depth)
    throw QuadratureDepthError(refined + err, a, b);
  return refine_panel(f, a, m, fa, flm, fm, left, spec, depth + 1) +
         refine_panel(f, m, b, fm, frm, fb, right, spec, depth + 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec) {
  if (!(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0) || spec.max_depth < 1)
    throw std::invalid_argument("integrate: invalid QuadratureSpec");
  if (!(a <= b)) throw std::invalid_argument("integrate: requires a <= b");
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fm = f(m);
  const double fb = f(b);
  const double whole = simpson(b - a, fa, fm, fb);
  return refine_panel(f, a, b, fa, fm, fb, whole, spec, 0);
}

RootBracket find_root_bracket(const std::function<double(double)>& f,
                              double lo, double hi, double tol) {
  if (!(lo <= hi)) throw std::invalid_argument("find_root: requires lo <= hi");
  if (!(tol > 0.0)) throw std::invalid_argument("find_root: requires tol > 0");
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return {lo, lo};
  if (fhi == 0.0) return {hi, hi};
  if ((flo > 0.0) == (fhi > 0.0)) throw NoBracketError(lo, hi);
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // interval at floating-point resolution
    const double fmid = f(mid);
    if (fmid == 0.0) return {mid, mid};
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
      fhi = fmid;
    }
  }
  return {lo, hi};
}

double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double tol) {
  return find_root_bracket(f, lo, hi, tol).midpoint();
}

SymMatrix4 SymMatrix4::identity() {
  SymMatrix4 m;
  for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
  return m;
}

SymMatrix4 SymMatrix4::diagonal(double d0, double d1, double d2, double d3) {
  SymMatrix4 m;
  m(0, 0) = d0;
  m(1, 1) = d1;
  m(2, 2) = d2;
  m(3, 3) = d3;
  return m;
}

double SymMatrix4::trace() const {
  return a_[0] + a_[5] + a_[10] + a_[15];
}

double SymMatrix4::frobenius_norm() const {
  double s = 0.0;
  for (double v : a_) s += v * v;
  return std::sqrt(s);
}

double SymMatrix4::max_asymmetry() const {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      worst = std::max(worst, std::abs((*this)(i, j) - (*this)(j, i)));
  return worst;
}

SymMatrix4 operator*(const SymMatrix4& a, const SymMatrix4& b) {
  SymMatrix4 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double s = 0.0;
      for (int k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
      out(i, j) = s;
    }
  return out;
}

EigenSym4 eigen_sym4(const SymMatrix4& m) {
  double a[4][4];
  double v[4][4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a[i][j] = m(i, j);

  const double scale = m.frobenius_norm();
  const double threshold = 1e-13 * scale;

  for (int sweep = 0; sweep < 50; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) off += 2.0 * a[p][q] * a[p][q];
    if (std::sqrt(off) <= threshold) break;

    for (int p = 0; p < 4; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        const double apq = a[p][q];
        if (apq == 0.0) continue;

        const double theta = 0.5 * (a[q][q] - a[p][p]) / apq;
        double t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        const double delta = t * apq;
        a[p][p] -= delta;
        a[q][q] += delta;
        a[p][q] = 0.0;
        a[q][p] = 0.0;
        for (int r = 0; r < 4; ++r) {
          if (r == p || r == q) continue;
          const double arp = a[r][p];
          const double arq = a[r][q];
          a[r][p] = arp - s * (arq + tau * arp);
          a[p][r] = a[r][p];
          a[r][q] = arq + s * (arp - tau * arq);
          a[q][r] = a[r][q];
        }
        for (int r = 0; r < 4; ++r) {
          const double vrp = v[r][p];
          const double vrq = v[r][q];
          v[r][p] = vrp - s * (vrq + tau * vrp);
          v[r][q] = vrq + s * (vrp - tau * vrq);
        }
      }
    }
  }

  std::array<int, 4> order = {0, 1, 2, 3};
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a[i][i] > a[j][j]; });

  EigenSym4 out;
  for (int k = 0; k < 4; ++k) {
    out.values[static_cast<size_t>(k)] = a[order[static_cast<size_t>(k)]][order[static_cast<size_t>(k)]];
    for (int i = 0; i < 4; ++i)
      out.vectors(i, k) = v[i][order[static_cast<size_t>(k)]];
  }
  return out;
}

SymMatrix4 psd_sqrt4(const SymMatrix4& m) {
  EigenSym4 eig = eigen_sym4(m);
  std::array<double, 4> roots{};
  for (int k = 0; k < 4; ++k) {
    double lambda = eig.values[static_cast<size_t>(k)];
    if (lambda < -1e-9) throw NotPsdError(lambda);
    roots[static_cast<size_t>(k)] = std::sqrt(std::max(lambda, 0.0));
  }
  SymMatrix4 out;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      double s = 0.0;
      for (int k = 0; k < 4; ++k)
        s += eig.vectors(i, k) * roots[static_cast<size_t>(k)] * eig.vectors(j, k);
      out(i, j) = s;
      out(j, i) = s;
    }
  return out;
}

}  // namespace fermipair
