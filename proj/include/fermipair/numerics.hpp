#pragma once

#include <array>
#include <functional>
#include <stdexcept>

namespace fermipair {

// Tolerances for adaptive panel integration. A panel is accepted once the
// Richardson error estimate drops below max(abs_tol, rel_tol * |panel value|).
struct QuadratureSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_depth = 40;
};

// Subdivision hit max_depth before the panel converged. Carries the best
// (extrapolated) estimate for the offending panel and its bounds.
class QuadratureDepthError : public std::runtime_error {
 public:
  QuadratureDepthError(double best_estimate, double panel_lo, double panel_hi);
  double best_estimate() const noexcept { return best_; }
  double panel_lo() const noexcept { return lo_; }
  double panel_hi() const noexcept { return hi_; }

 private:
  double best_;
  double lo_;
  double hi_;
};

class NoBracketError : public std::runtime_error {
 public:
  NoBracketError(double lo, double hi);
};

class NotPsdError : public std::runtime_error {
 public:
  explicit NotPsdError(double min_eigenvalue);
  double min_eigenvalue() const noexcept { return min_eig_; }

 private:
  double min_eig_;
};

// Spherical Bessel j1(x) = sin(x)/x^2 - cos(x)/x, with a series branch below
// |x| = 0.1 so the x -> 0 limit is exact and smooth. Odd, total function.
double spherical_j1(double x);

// First-kind Bessel J1, absolute accuracy <= 1e-10 on [0, 50]. Ascending
// series up to x = 12, Hankel asymptotic expansion beyond. Odd extension
// for negative arguments.
double bessel_j1(double x);

// x log2(x) with the 0 log 0 = 0 convention. All information-theoretic
// quantities in this library are in bits; natural logs appear only inside
// physics integrals.
double xlog2(double x);

// Shannon entropy of a bit, -x log2 x - (1-x) log2(1-x). Arguments outside
// [0,1] by more than 1e-12 signal a caller bug and throw std::domain_error.
double binary_entropy(double x);

// Adaptive Simpson integration of f over [a, b]. Panels split at their
// midpoint until the per-panel criterion of `spec` holds; the accepted value
// includes the (S2 - S1)/15 correction. Throws QuadratureDepthError when a
// panel cannot be resolved within spec.max_depth levels.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec = {});

// Final bisection bracket: f changes sign (or vanishes) on [lo, hi].
struct RootBracket {
  double lo;
  double hi;
  double midpoint() const noexcept { return 0.5 * (lo + hi); }
};

// Bisect until hi - lo <= tol. Requires f(lo) and f(hi) of opposite sign
// (NoBracketError otherwise). Deterministic.
RootBracket find_root_bracket(const std::function<double(double)>& f,
                              double lo, double hi, double tol);
double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double tol);

// Dense real symmetric 4x4 matrix, row-major storage.
class SymMatrix4 {
 public:
  SymMatrix4() : a_{} {}

  static SymMatrix4 identity();
  static SymMatrix4 diagonal(double d0, double d1, double d2, double d3);

  double& operator()(int i, int j) { return a_[static_cast<size_t>(4 * i + j)]; }
  double operator()(int i, int j) const { return a_[static_cast<size_t>(4 * i + j)]; }

  double trace() const;
  double frobenius_norm() const;
  // Largest |a_ij - a_ji|, for checking the symmetry invariant.
  double max_asymmetry() const;

 private:
  std::array<double, 16> a_;
};

SymMatrix4 operator*(const SymMatrix4& a, const SymMatrix4& b);

struct EigenSym4 {
  std::array<double, 4> values;  // descending
  SymMatrix4 vectors;            // column k is the eigenvector of values[k]
};

// Cyclic Jacobi rotations until the off-diagonal Frobenius norm falls below
// 1e-13 * ||M||_F. Eigenvalues sorted descending, eigenvectors orthonormal.
EigenSym4 eigen_sym4(const SymMatrix4& m);

// Symmetric PSD square root V diag(sqrt(lambda)) V^T. Eigenvalues in
// [-1e-9, 0) are clamped to zero; anything below -1e-9 throws NotPsdError.
SymMatrix4 psd_sqrt4(const SymMatrix4& m);

namespace detail {
double spherical_j1_series(double x);
double spherical_j1_closed(double x);
double bessel_j1_series(double x);
double bessel_j1_asymptotic(double x);
}  // namespace detail

}  // namespace fermipair
