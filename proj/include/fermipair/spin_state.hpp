#pragma once

#include "fermipair/numerics.hpp"

namespace fermipair {

// Werner-state parameters of the two-spin state of the gas:
//   p = f^2 / (2 - f^2),  F = <Psi-|rho|Psi-> = (3p + 1)/4 = (f^2 + 1)/(4 - 2 f^2),
// both monotone increasing in f^2.
struct WernerParams {
  double f2;
  double p;
  double fidelity;
};

// f2 outside [0, 1] by at most 1e-9 (upstream quadrature fuzz) is clamped;
// beyond that throws std::domain_error.
WernerParams werner_from_f2(double f2);

// Two-spin reduced density matrix in the basis (uu, ud, du, dd).
// Unit trace, PSD, both one-spin marginals maximally mixed.
struct TwoSpinDensityMatrix {
  SymMatrix4 m;
};

// rho = (1-p) I/4 + p |Psi-><Psi-|. Entrywise: corner diagonals
// (1-f^2)/(4-2f^2), central diagonals 1/(4-2f^2), central off-diagonals
// -f^2/(4-2f^2). The corners are computed as 1/2 minus the central diagonal,
// which keeps the one-spin marginals at exactly I/2 in floating point.
TwoSpinDensityMatrix density_matrix(const WernerParams& params);

// Transpose on the second spin index pair: (s1 s2, s1' s2') -> (s1 s2', s1' s2).
SymMatrix4 partial_transpose(const TwoSpinDensityMatrix& rho);

// Peres-Horodecki test: entangled iff the partial transpose has an
// eigenvalue below -1e-12. States on the boundary count as separable.
bool is_entangled_ppt(const TwoSpinDensityMatrix& rho);

// Wootters concurrence of a real two-qubit state. Builds the spin-flipped
// rho~ = (sy x sy) rho (sy x sy), forms the symmetric M = sqrt(rho) rho~
// sqrt(rho), and returns max(0, l1 - l2 - l3 - l4) with l_i the descending
// square roots of M's eigenvalues. This is the matrix-level oracle for the
// closed-form concurrence.
double wootters_concurrence(const TwoSpinDensityMatrix& rho);

// S(rho) = -Tr(rho log2 rho) in bits, for a PSD unit-trace matrix.
double von_neumann_entropy(const SymMatrix4& rho);
double von_neumann_entropy(const TwoSpinDensityMatrix& rho);

}  // namespace fermipair
