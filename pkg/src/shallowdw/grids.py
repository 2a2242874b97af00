"""Uniform symmetric grids, sampled wavefunctions and finite-difference helpers.

Everything downstream (closed-form states, the tridiagonal eigensolver, the
two-level dynamics) works on a single uniform mesh symmetric about x = 0.
Quadrature is composite trapezoid throughout: the integrands decay
exponentially, so trapezoid converges spectrally on these tails.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

NORM_TOL = 1e-10


class GridTooNarrow(ValueError):
    """The grid does not reach far enough into the decay tails."""


@dataclass(frozen=True)
class Grid:
    """Uniform mesh on [-x_max, x_max] with an odd number of nodes.

    n_points must be odd so that x = 0 is a node (needed for the
    left/right-well split and the central-curvature checks).
    """

    x_min: float
    x_max: float
    n_points: int

    def __post_init__(self):
        if self.x_min != -self.x_max:
            raise ValueError("grid must be symmetric: x_min == -x_max")
        if self.n_points < 3 or self.n_points % 2 == 0:
            raise ValueError("n_points must be odd and >= 3")
        if not self.x_max > 0:
            raise ValueError("x_max must be positive")

    @classmethod
    def default(cls) -> "Grid":
        return cls(-20.0, 20.0, 4001)

    @classmethod
    def symmetric(cls, x_max: float, n_points: int) -> "Grid":
        return cls(-float(x_max), float(x_max), int(n_points))

    @property
    def h(self) -> float:
        return (self.x_max - self.x_min) / (self.n_points - 1)

    @cached_property
    def x(self) -> np.ndarray:
        # mirror the positive half so x[i] == -x[n-1-i] holds exactly;
        # plain linspace is symmetric only to rounding
        half = np.linspace(0.0, self.x_max, self.n_points // 2 + 1)
        return np.concatenate((-half[:0:-1], half))

    @property
    def center_index(self) -> int:
        return self.n_points // 2


@dataclass(frozen=True)
class RealWave:
    """Real wavefunction sampled on a grid."""

    grid: Grid
    samples: np.ndarray = field(repr=False)
    normalized: bool = False

    def __post_init__(self):
        samples = np.asarray(self.samples, dtype=float)
        object.__setattr__(self, "samples", samples)
        if samples.shape != (self.grid.n_points,):
            raise ValueError("sample count does not match grid")
        if self.normalized and abs(self.norm_squared() - 1.0) > NORM_TOL:
            raise ValueError("wave flagged normalized but trapezoid norm != 1")

    def norm_squared(self) -> float:
        return float(np.trapezoid(self.samples**2, dx=self.grid.h))

    def normalize(self) -> "RealWave":
        nrm = np.sqrt(self.norm_squared())
        if nrm == 0.0:
            raise ValueError("cannot normalize the zero wave")
        return RealWave(self.grid, self.samples / nrm, normalized=True)

    def overlap(self, other: "RealWave") -> float:
        """Trapezoid inner product <self, other>."""
        return float(np.trapezoid(self.samples * other.samples, dx=self.grid.h))


@dataclass(frozen=True)
class ComplexWave:
    """Complex wavefunction sampled on a grid."""

    grid: Grid
    samples: np.ndarray = field(repr=False)
    normalized: bool = False

    def __post_init__(self):
        samples = np.asarray(self.samples, dtype=complex)
        object.__setattr__(self, "samples", samples)
        if samples.shape != (self.grid.n_points,):
            raise ValueError("sample count does not match grid")
        if self.normalized and abs(self.norm_squared() - 1.0) > NORM_TOL:
            raise ValueError("wave flagged normalized but trapezoid norm != 1")

    def norm_squared(self) -> float:
        return float(np.trapezoid(np.abs(self.samples) ** 2, dx=self.grid.h))

    def density(self) -> np.ndarray:
        return np.abs(self.samples) ** 2


def first_derivative(samples: np.ndarray, h: float) -> np.ndarray:
    """d/dx of sampled data: 4th-order central interior, 2nd-order edges."""
    f = np.asarray(samples, dtype=float)
    g = np.empty_like(f)
    g[2:-2] = (f[:-4] - 8 * f[1:-3] + 8 * f[3:-1] - f[4:]) / (12 * h)
    g[1] = (f[2] - f[0]) / (2 * h)
    g[-2] = (f[-1] - f[-3]) / (2 * h)
    g[0] = (-3 * f[0] + 4 * f[1] - f[2]) / (2 * h)
    g[-1] = (3 * f[-1] - 4 * f[-2] + f[-3]) / (2 * h)
    return g


def second_derivative(samples: np.ndarray, h: float) -> np.ndarray:
    """d2/dx2 of sampled data: 4th-order central interior, 2nd-order edges."""
    f = np.asarray(samples, dtype=float)
    h2 = h * h
    g = np.empty_like(f)
    g[2:-2] = (-f[:-4] + 16 * f[1:-3] - 30 * f[2:-2] + 16 * f[3:-1] - f[4:]) / (12 * h2)
    g[1] = (f[0] - 2 * f[1] + f[2]) / h2
    g[-2] = (f[-3] - 2 * f[-2] + f[-1]) / h2
    g[0] = (2 * f[0] - 5 * f[1] + 4 * f[2] - f[3]) / h2
    g[-1] = (2 * f[-1] - 5 * f[-2] + 4 * f[-3] - f[-4]) / h2
    return g
