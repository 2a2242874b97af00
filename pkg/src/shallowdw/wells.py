"""Classification of the partner wells and the central-curvature law.

The one-parameter family splits at closed-form thresholds:

    eps <= -3 or eps -> -1 : single well (V''(0) >= 0)
    -2 < eps < -1          : double well, ground level below the barrier top
    -3 < eps < -2          : double well, ground level above the barrier top

with s = V(0) = 2 eps + 2 the barrier-top (separatrix) energy.  The ground
density obeys rho''(0) = 2 (s - eps) rho(0), so its center flips from
minimum (bimodal density) to maximum exactly where the ground level crosses
the barrier top, i.e. at eps = -2.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .grids import Grid, RealWave
from .transform import (
    EpsilonLike,
    _epsilon,
    curvature_at_origin,
    ground_state,
    separatrix_energy,
)

PLATEAU_TOL = 1e-13  # first differences below this count as flat


class WellKind(enum.Enum):
    SINGLE_WELL = "single well"
    DOUBLE_WELL_GROUND_BELOW_SEPARATRIX = "double well, ground below separatrix"
    DOUBLE_WELL_GROUND_ABOVE_SEPARATRIX = "double well, ground above separatrix"
    BOUNDARY = "boundary"


@dataclass(frozen=True)
class WellClassification:
    epsilon: float
    kind: WellKind
    separatrix: float
    curvature_origin: float
    density_maxima_count: int


def count_density_maxima(rho: RealWave) -> int:
    """Strict local maxima of a sampled density.

    Counts +/- sign changes of the discrete first difference, ignoring
    flat steps below PLATEAU_TOL (floating-point plateaus near symmetric
    peaks would otherwise double-count).
    """
    diffs = np.diff(rho.samples)
    signs = np.sign(diffs)
    signs[np.abs(diffs) <= PLATEAU_TOL] = 0
    signs = signs[signs != 0]
    return int(np.sum((signs[:-1] > 0) & (signs[1:] < 0)))


def classify(eps: EpsilonLike, grid: Grid | None = None) -> WellClassification:
    """Place eps in the interval taxonomy and count density maxima.

    The boundary values eps in {-3, -2} are reported as their own kind
    (exact float comparison) rather than forced into either class.
    """
    eps_val = _epsilon(eps)
    if grid is None:
        grid = Grid.default()
    if eps_val in (-3.0, -2.0):
        kind = WellKind.BOUNDARY
    elif -2.0 < eps_val:
        kind = WellKind.DOUBLE_WELL_GROUND_BELOW_SEPARATRIX
    elif -3.0 < eps_val:
        kind = WellKind.DOUBLE_WELL_GROUND_ABOVE_SEPARATRIX
    else:
        kind = WellKind.SINGLE_WELL
    psi0 = ground_state(eps_val, grid)
    rho = RealWave(grid, psi0.samples**2)
    return WellClassification(
        epsilon=eps_val,
        kind=kind,
        separatrix=separatrix_energy(eps_val),
        curvature_origin=curvature_at_origin(eps_val),
        density_maxima_count=count_density_maxima(rho),
    )


def check_bimodality_relation(
    eps: EpsilonLike, grid: Grid | None = None
) -> Tuple[float, float, float]:
    """Test rho''(0) = 2 (s - eps) rho(0) on the sampled ground density.

    Returns (lhs, rhs, rel_err): lhs is a 5-point second difference of rho
    at x = 0, rhs the closed form.  A positive lhs means a central density
    minimum (bimodal), negative a central maximum.
    """
    eps_val = _epsilon(eps)
    if grid is None:
        grid = Grid.default()
    rho = ground_state(eps_val, grid).samples ** 2
    mid = grid.center_index
    h2 = grid.h * grid.h
    lhs = (
        -rho[mid - 2] + 16 * rho[mid - 1] - 30 * rho[mid]
        + 16 * rho[mid + 1] - rho[mid + 2]
    ) / (12 * h2)
    rhs = 2.0 * (separatrix_energy(eps_val) - eps_val) * rho[mid]
    rel_err = abs(lhs - rhs) / max(abs(rhs), 1e-30)
    return float(lhs), float(rhs), float(rel_err)
