"""Pair correlations and spin entanglement of the ideal Fermi gas."""

from ._core import (
    BELL_THRESHOLD_F2,
    MeasureSet,
    PairFunctionValue,
    QuadratureSpec,
    ThermalState,
    WernerParams,
    __version__,
    bessel_j1,
    binary_entropy,
    classical_correlation,
    classify,
    concurrence_closed,
    delta_concurrence,
    delta_f_numeric,
    delta_f_sommerfeld,
    delta_relative_entropy,
    density_matrix,
    eigen_sym4,
    entanglement_of_formation,
    f_finite_t,
    f_sommerfeld_shifted,
    f_zero_t,
    find_root,
    integrate,
    is_entangled_ppt,
    measure_set,
    mutual_information,
    normalization_residual,
    occupation,
    pair_distributions,
    partial_transpose,
    power_law_exponent,
    psd_sqrt4,
    relative_entropy_entanglement,
    run_validation,
    scaling_exponent,
    solve_chemical_potential,
    spherical_j1,
    sum_rule_residual,
    von_neumann_entropy,
    werner_from_f2,
    wootters_concurrence,
)

__all__ = [
    "BELL_THRESHOLD_F2",
    "MeasureSet",
    "PairFunctionValue",
    "QuadratureSpec",
    "ThermalState",
    "WernerParams",
    "__version__",
    "bessel_j1",
    "binary_entropy",
    "classical_correlation",
    "classify",
    "concurrence_closed",
    "delta_concurrence",
    "delta_f_numeric",
    "delta_f_sommerfeld",
    "delta_relative_entropy",
    "density_matrix",
    "eigen_sym4",
    "entanglement_of_formation",
    "f_finite_t",
    "f_sommerfeld_shifted",
    "f_zero_t",
    "find_root",
    "integrate",
    "is_entangled_ppt",
    "measure_set",
    "mutual_information",
    "normalization_residual",
    "occupation",
    "pair_distributions",
    "partial_transpose",
    "power_law_exponent",
    "psd_sqrt4",
    "relative_entropy_entanglement",
    "run_validation",
    "scaling_exponent",
    "solve_chemical_potential",
    "spherical_j1",
    "sum_rule_residual",
    "von_neumann_entropy",
    "werner_from_f2",
    "wootters_concurrence",
]
