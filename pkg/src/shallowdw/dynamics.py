"""Two-level inter-well dynamics of the equal-weight superposition.

The superposition (psi0 e^{-i eps t} + psi1 e^{i t}) / sqrt(2) lives entirely
in the two-level subspace, so time evolution is an exact phase rotation of
the two closed-form eigenstates; no PDE time stepping is involved.  The
density cross term rotates at the gap frequency |1 + eps|, making the
probability in the left half-line oscillate sinusoidally with period
2 pi / |1 + eps|.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .grids import ComplexWave, Grid
from .transform import EpsilonLike, _epsilon, excited_state, ground_state

SQRT_HALF = np.sqrt(0.5)


@dataclass(frozen=True)
class OscillationSeries:
    epsilon: float
    times: np.ndarray = field(repr=False)
    left_probability: np.ndarray = field(repr=False)
    analytic_period: float


def analytic_period(eps: EpsilonLike) -> float:
    """Oscillation period 2 pi / |1 + eps| of the two-level beat."""
    return 2.0 * np.pi / abs(1.0 + _epsilon(eps))


def lc_state(eps: EpsilonLike, grid: Grid, t: float) -> ComplexWave:
    """Equal-weight superposition of the two bound states at time t.

    Normalized for every t (orthonormal components, unitary phases).
    """
    eps_val = _epsilon(eps)
    psi0 = ground_state(eps_val, grid).samples
    psi1 = excited_state(eps_val, grid).samples
    samples = SQRT_HALF * (
        np.exp(-1j * eps_val * t) * psi0 + np.exp(1j * t) * psi1
    )
    return ComplexWave(grid, samples, normalized=True)


def left_well_probability(psi: ComplexWave) -> float:
    """Probability of finding the particle at x <= 0.

    Trapezoid rule over [x_min, 0]; the node at x = 0 naturally carries
    half weight as the subinterval endpoint.
    """
    mid = psi.grid.center_index
    dens = psi.density()
    return float(np.trapezoid(dens[: mid + 1], dx=psi.grid.h))


def evolve_series(
    eps: EpsilonLike, grid: Grid, t_max: float, n_frames: int
) -> OscillationSeries:
    """Sample the left-well probability at n_frames uniform times in [0, t_max]."""
    eps_val = _epsilon(eps)
    if n_frames < 2:
        raise ValueError("n_frames must be at least 2")
    times = np.linspace(0.0, float(t_max), int(n_frames))
    psi0 = ground_state(eps_val, grid).samples
    psi1 = excited_state(eps_val, grid).samples
    mid = grid.center_index
    left = np.empty_like(times)
    for i, t in enumerate(times):
        samples = SQRT_HALF * (
            np.exp(-1j * eps_val * t) * psi0 + np.exp(1j * t) * psi1
        )
        dens = np.abs(samples) ** 2
        left[i] = np.trapezoid(dens[: mid + 1], dx=grid.h)
    return OscillationSeries(
        epsilon=eps_val,
        times=times,
        left_probability=left,
        analytic_period=analytic_period(eps_val),
    )
