import functools

import pytest

from shallowdw import Grid, verify_spectrum


@pytest.fixture(scope="session")
def default_grid():
    return Grid.default()


@functools.lru_cache(maxsize=None)
def cached_report(eps: float, x_max: float = 20.0, n_points: int = 4001):
    """Share eigensolver runs between test modules."""
    return verify_spectrum(eps, Grid.symmetric(x_max, n_points))
