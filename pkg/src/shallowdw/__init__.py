"""Exactly soluble shallow double wells from the sech^2 well.

A one-parameter family of symmetric shallow double-well potentials with two
closed-form bound states, an independent finite-difference eigensolver to
verify them, an interval classification of the wells, and the two-level
inter-well oscillation of the equal-weight superposition.
"""

from .dynamics import (
    ComplexWave,
    OscillationSeries,
    analytic_period,
    evolve_series,
    lc_state,
    left_well_probability,
)
from .grids import Grid, GridTooNarrow, RealWave
from .oracle import (
    BoundStateCountMismatch,
    ConvergenceFailure,
    SpectrumReport,
    TridiagonalHamiltonian,
    build_hamiltonian,
    check_intertwining,
    eigen_residual,
    lowest_eigenpairs,
    sturm_count,
    verify_spectrum,
)
from .transform import (
    FactorizationEnergy,
    InvalidEpsilon,
    PotentialCurve,
    apply_a,
    apply_a_dagger,
    base_ground_state,
    curvature_at_origin,
    excited_state,
    ground_state,
    log_derivative_of_seed,
    potential,
    potential_curve,
    potential_log_form,
    seed_function,
    separatrix_energy,
)
from .wells import (
    WellClassification,
    WellKind,
    check_bimodality_relation,
    classify,
    count_density_maxima,
)

__version__ = "0.1.0"

__all__ = [
    "BoundStateCountMismatch",
    "ComplexWave",
    "ConvergenceFailure",
    "FactorizationEnergy",
    "Grid",
    "GridTooNarrow",
    "InvalidEpsilon",
    "OscillationSeries",
    "PotentialCurve",
    "RealWave",
    "SpectrumReport",
    "TridiagonalHamiltonian",
    "WellClassification",
    "WellKind",
    "analytic_period",
    "apply_a",
    "apply_a_dagger",
    "base_ground_state",
    "build_hamiltonian",
    "check_bimodality_relation",
    "check_intertwining",
    "classify",
    "count_density_maxima",
    "curvature_at_origin",
    "eigen_residual",
    "evolve_series",
    "excited_state",
    "ground_state",
    "lc_state",
    "left_well_probability",
    "log_derivative_of_seed",
    "lowest_eigenpairs",
    "potential",
    "potential_curve",
    "potential_log_form",
    "seed_function",
    "separatrix_energy",
    "sturm_count",
    "verify_spectrum",
]
