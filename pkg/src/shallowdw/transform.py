"""Darboux partner family of the sech^2 well.

The base Hamiltonian eta = -d2/dx2 - 2 sech^2(x) (hbar = 2m = 1) is factorized
as eta = A+ A + eps using the first-order operators

    A  = -d/dx + u'/u,      A+ = +d/dx + u'/u,

built from the node-free seed  u(x) = sinh(kx) tanh(x) - k cosh(kx),
k = sqrt(|eps|), which solves eta u = eps u for any eps < -1.  Reordering the
factors gives the partner Hamiltonian Xi = A A+ + eps = -d2/dx2 + V(x) whose
two bound states are known in closed form: the ground state 1/u (energy eps)
and A applied to the base ground state sqrt(1/2) sech(x) (energy -1).

For -3 < eps < -1 the partner potential V is a symmetric double well; it is
this shallow-double-well regime the rest of the package studies.

All hyperbolics are evaluated in exponentially scaled form (common factor
e^{k|x|} pulled out) so that ratios like u'/u and the potential stay finite
and accurate for arbitrarily large |x|; naive sinh/cosh overflow near
k|x| ~ 710 and lose precision in the subtractive seed well before that.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Union

import numpy as np

from .grids import Grid, GridTooNarrow, RealWave, first_derivative

EPSILON_MAX = -1.0 - 1e-9  # transform degenerates (V -> 0) as eps -> -1
TAIL_TOL = 1e-6  # max allowed |psi(x_max)| / max|psi| before GridTooNarrow


class InvalidEpsilon(ValueError):
    """Factorization energy outside the valid range eps < -1."""


@dataclass(frozen=True)
class FactorizationEnergy:
    """Validated factorization energy eps < -1 of the transform."""

    epsilon: float

    def __post_init__(self):
        eps = float(self.epsilon)
        if not np.isfinite(eps) or eps > EPSILON_MAX:
            raise InvalidEpsilon(
                f"factorization energy must satisfy eps <= {EPSILON_MAX} "
                f"(strictly below the base ground level -1), got {eps!r}"
            )
        object.__setattr__(self, "epsilon", eps)

    @property
    def k(self) -> float:
        """Decay rate sqrt(|eps|) of the transformed ground state."""
        return float(np.sqrt(-self.epsilon))


EpsilonLike = Union[FactorizationEnergy, float]


def _epsilon(eps: EpsilonLike) -> float:
    if isinstance(eps, FactorizationEnergy):
        return eps.epsilon
    return FactorizationEnergy(float(eps)).epsilon


class _SeedParts(NamedTuple):
    """Exponentially scaled seed data: actual value = field * exp(growth)."""

    growth: np.ndarray  # k|x|
    u: np.ndarray       # u e^{-k|x|}
    du: np.ndarray      # u' e^{-k|x|}
    d2u: np.ndarray     # u'' e^{-k|x|}
    q: np.ndarray       # e^{-2k|x|}
    s: np.ndarray       # sinh(kx) e^{-k|x|}
    sech2: np.ndarray   # sech^2(x)


def _seed_parts(eps_val: float, x) -> _SeedParts:
    x = np.asarray(x, dtype=float)
    k = np.sqrt(-eps_val)
    ax = np.abs(x)
    q = np.exp(-2.0 * k * ax)
    # 1 - q via expm1 keeps sinh accurate near x = 0
    s = np.sign(x) * (-np.expm1(-2.0 * k * ax)) / 2.0
    c = (1.0 + q) / 2.0
    t = np.tanh(x)
    # sech^2 via decaying exponentials; 1/cosh^2 overflows past |x| ~ 355
    q1 = np.exp(-np.abs(x))
    sech2 = (2.0 * q1 / (1.0 + q1 * q1)) ** 2
    u = s * t - k * c
    du = k * c * t + s * (sech2 - k * k)
    d2u = k * k * s * t + 2.0 * k * c * sech2 - 2.0 * s * t * sech2 - k**3 * c
    return _SeedParts(k * ax, u, du, d2u, q, s, sech2)


def _as_returned(value: np.ndarray, like) -> "float | np.ndarray":
    if np.isscalar(like) or np.ndim(like) == 0:
        return float(value)
    return value


def seed_function(eps: EpsilonLike, x):
    """Seed u(x) = sinh(kx) tanh(x) - k cosh(kx), k = sqrt(|eps|).

    Even in x, strictly negative (node-free) for every valid eps; solves the
    base eigenvalue problem at energy eps without being normalizable.
    Accepts scalars or arrays.
    """
    eps_val = _epsilon(eps)
    p = _seed_parts(eps_val, x)
    return _as_returned(p.u * np.exp(p.growth), x)


def log_derivative_of_seed(eps: EpsilonLike, x):
    """Superpotential u'/u in closed form (no numerical differencing).

    Odd in x; tends to +-sqrt(|eps|) as x -> +-inf.  Well defined everywhere
    because the seed is node-free.
    """
    eps_val = _epsilon(eps)
    p = _seed_parts(eps_val, x)
    return _as_returned(p.du / p.u, x)


def potential(eps: EpsilonLike, x):
    """Partner potential in explicit closed form.

    V(x) = 2(1+eps) (-eps + sech^2(x) sinh^2(kx))
           / (tanh(x) sinh(kx) - k cosh(kx))^2

    evaluated with the e^{2k|x|} growth cancelled analytically.  Even in x and
    -> 0 as |x| -> inf.  At x = 0 the expression reduces exactly to 2 eps + 2,
    which is returned verbatim to keep the barrier-top value free of rounding.
    """
    eps_val = _epsilon(eps)
    p = _seed_parts(eps_val, x)
    v = 2.0 * (1.0 + eps_val) * (-eps_val * p.q + p.sech2 * p.s**2) / p.u**2
    v = np.where(np.asarray(x, dtype=float) == 0.0, 2.0 * eps_val + 2.0, v)
    return _as_returned(v, x)


def potential_log_form(eps: EpsilonLike, x):
    """Partner potential from the superpotential: 2(u'/u)^2 - u''/u + eps.

    Independent route to the same curve as :func:`potential`; kept as a
    cross-check (two formulas, one truth).
    """
    eps_val = _epsilon(eps)
    p = _seed_parts(eps_val, x)
    v = 2.0 * (p.du / p.u) ** 2 - p.d2u / p.u + eps_val
    return _as_returned(v, x)


def separatrix_energy(eps: EpsilonLike) -> float:
    """Barrier-top energy s = V(0) = 2 eps + 2 (closed form)."""
    return 2.0 * _epsilon(eps) + 2.0


def curvature_at_origin(eps: EpsilonLike) -> float:
    """V''(0) = 4 (3 + 4 eps + eps^2); negative exactly for -3 < eps < -1."""
    eps_val = _epsilon(eps)
    return 4.0 * (3.0 + 4.0 * eps_val + eps_val * eps_val)


@dataclass(frozen=True)
class PotentialCurve:
    """Partner potential sampled on a grid."""

    grid: Grid
    values: np.ndarray = field(repr=False)
    epsilon: FactorizationEnergy

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        object.__setattr__(self, "values", values)
        if values.shape != (self.grid.n_points,):
            raise ValueError("value count does not match grid")
        if np.max(np.abs(values - values[::-1])) > 1e-12:
            raise ValueError("potential samples are not even in x")
        if values[self.grid.center_index] != separatrix_energy(self.epsilon):
            raise ValueError("potential at x=0 must equal 2 eps + 2")


def potential_curve(eps: EpsilonLike, grid: Grid) -> PotentialCurve:
    """Sample the partner potential on a grid."""
    eps_obj = eps if isinstance(eps, FactorizationEnergy) else FactorizationEnergy(float(eps))
    return PotentialCurve(grid, potential(eps_obj, grid.x), eps_obj)


def _check_tail(samples: np.ndarray, what: str) -> None:
    peak = np.max(np.abs(samples))
    tail = max(abs(samples[0]), abs(samples[-1]))
    if tail > TAIL_TOL * peak:
        raise GridTooNarrow(
            f"{what} has not decayed at the grid edge "
            f"(|psi(x_max)|/peak = {tail / peak:.2e} > {TAIL_TOL:.0e}); "
            "increase x_max"
        )


def ground_state(eps: EpsilonLike, grid: Grid) -> RealWave:
    """Normalized partner ground state, proportional to 1/u.

    Even, strictly positive, energy eps.  Raises GridTooNarrow when the grid
    does not contain the decay tails.
    """
    eps_val = _epsilon(eps)
    p = _seed_parts(eps_val, grid.x)
    # u < 0 everywhere, so -1/u is the positive branch
    samples = -np.exp(-p.growth) / p.u
    _check_tail(samples, "ground state")
    return RealWave(grid, samples).normalize()


def base_ground_state(grid: Grid) -> RealWave:
    """Ground state sqrt(1/2) sech(x) of the base sech^2 well, energy -1."""
    # analytic L2 norm over R is 1; grid truncation must be negligible
    if 2.0 * (1.0 - np.tanh(grid.x_max)) > 1e-10:
        raise GridTooNarrow("grid too narrow for sech(x) normalization")
    samples = np.sqrt(0.5) / np.cosh(grid.x)
    return RealWave(grid, samples).normalize()


def apply_a(eps: EpsilonLike, f: RealWave) -> RealWave:
    """Apply A = -d/dx + u'/u to a sampled wave.

    The derivative uses 4th-order central differences (one-sided at the
    edges); the superpotential term is analytic.
    """
    eps_val = _epsilon(eps)
    df = first_derivative(f.samples, f.grid.h)
    lder = log_derivative_of_seed(eps_val, f.grid.x)
    return RealWave(f.grid, -df + lder * f.samples)


def apply_a_dagger(eps: EpsilonLike, f: RealWave) -> RealWave:
    """Apply A+ = +d/dx + u'/u to a sampled wave.

    A+ annihilates 1/u, which is how the partner ground state inherits
    eigenvalue eps from Xi = A A+ + eps.
    """
    eps_val = _epsilon(eps)
    df = first_derivative(f.samples, f.grid.h)
    lder = log_derivative_of_seed(eps_val, f.grid.x)
    return RealWave(f.grid, df + lder * f.samples)


def excited_state(eps: EpsilonLike, grid: Grid) -> RealWave:
    """Normalized partner excited state, proportional to A applied to
    the base ground state; energy -1.

    Evaluated in closed form: A [sech(x)] = sech(x) (tanh(x) + u'/u), so the
    state carries no finite-difference error.  Odd, single node at x = 0,
    sign fixed so psi1 > 0 for x > 0.
    """
    eps_val = _epsilon(eps)
    p = _seed_parts(eps_val, grid.x)
    samples = (np.tanh(grid.x) + p.du / p.u) / np.cosh(grid.x)
    _check_tail(samples, "excited state")
    wave = RealWave(grid, samples).normalize()
    if wave.samples[grid.center_index + 1] < 0.0:
        wave = RealWave(grid, -wave.samples, normalized=True)
    return wave
