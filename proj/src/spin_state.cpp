#include "fermipair/spin_state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fermipair {

WernerParams werner_from_f2(double f2) {
  if (f2 < -1e-9 || f2 > 1.0 + 1e-9)
    throw std::domain_error("werner_from_f2: f2 = " + std::to_string(f2) +
                            " outside [0, 1]");
  f2 = std::clamp(f2, 0.0, 1.0);
  const double p = f2 / (2.0 - f2);
  return {f2, p, (3.0 * p + 1.0) / 4.0};
}

TwoSpinDensityMatrix density_matrix(const WernerParams& params) {
  const double center = 1.0 / (4.0 - 2.0 * params.f2);  // in [1/4, 1/2]
  const double corner = 0.5 - center;  // exact: Sterbenz subtraction
  const double off = -params.f2 * center;
  TwoSpinDensityMatrix rho;
  rho.m(0, 0) = corner;
  rho.m(1, 1) = center;
  rho.m(2, 2) = center;
  rho.m(3, 3) = corner;
  rho.m(1, 2) = off;
  rho.m(2, 1) = off;
  return rho;
}

SymMatrix4 partial_transpose(const TwoSpinDensityMatrix& rho) {
  SymMatrix4 out;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d)
          out(2 * a + b, 2 * c + d) = rho.m(2 * a + d, 2 * c + b);
  return out;
}

bool is_entangled_ppt(const TwoSpinDensityMatrix& rho) {
  const EigenSym4 eig = eigen_sym4(partial_transpose(rho));
  return eig.values[3] < -1e-12;
}

namespace {

// Conjugation by sigma_y x sigma_y, which is the real signed antidiagonal
// with signs (-1, +1, +1, -1): (Y rho Y)_{ij} = s_i s_j rho_{3-i, 3-j}.
SymMatrix4 spin_flip(const SymMatrix4& rho) {
  constexpr double sign[4] = {-1.0, 1.0, 1.0, -1.0};
  SymMatrix4 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      out(i, j) = sign[i] * sign[j] * rho(3 - i, 3 - j);
  return out;
}

}  // namespace

double wootters_concurrence(const TwoSpinDensityMatrix& rho) {
  const SymMatrix4 root = psd_sqrt4(rho.m);
  const SymMatrix4 middle = root * spin_flip(rho.m) * root;
  const EigenSym4 eig = eigen_sym4(middle);
  double lambda[4];
  for (int k = 0; k < 4; ++k)
    lambda[k] = std::sqrt(std::max(eig.values[static_cast<size_t>(k)], 0.0));
  return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

double von_neumann_entropy(const SymMatrix4& rho) {
  const EigenSym4 eig = eigen_sym4(rho);
  double s = 0.0;
  for (double lambda : eig.values) {
    if (lambda < -1e-9) throw NotPsdError(lambda);
    s -= xlog2(std::max(lambda, 0.0));
  }
  return s;
}

double von_neumann_entropy(const TwoSpinDensityMatrix& rho) {
  return von_neumann_entropy(rho.m);
}

}  // namespace fermipair
