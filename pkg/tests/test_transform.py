"""Closed-form seed, potential and bound-state checks."""

import numpy as np
import pytest

from shallowdw import (
    FactorizationEnergy,
    Grid,
    GridTooNarrow,
    InvalidEpsilon,
    RealWave,
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

EPS_SWEEP = [-1.05, -1.5, -2.0, -2.25, -2.95, -3.7, -6.0, -10.0]

# extended-precision evaluation of the seed (mpmath, 50 digits), frozen
SEED_AT_225_15 = -2.948648496052271925


class TestEpsilonValidation:
    def test_accepts_below_threshold(self):
        assert FactorizationEnergy(-1.0001).epsilon == -1.0001
        assert FactorizationEnergy(-10.0).k == pytest.approx(np.sqrt(10.0))

    @pytest.mark.parametrize("bad", [-1.0, -0.5, 0.0, 2.0, -1.0 - 1e-10,
                                     float("nan"), float("inf")])
    def test_rejects_invalid(self, bad):
        with pytest.raises(InvalidEpsilon):
            FactorizationEnergy(bad)


class TestGrid:
    def test_defaults(self, default_grid):
        assert default_grid.n_points == 4001
        assert default_grid.h == pytest.approx(0.01)
        assert default_grid.x[default_grid.center_index] == 0.0

    @pytest.mark.parametrize("args", [(-20.0, 20.0, 4000), (-19.0, 20.0, 4001),
                                      (-1.0, 1.0, 2)])
    def test_rejects_bad_meshes(self, args):
        with pytest.raises(ValueError):
            Grid(*args)


class TestSeedFunction:
    def test_value_at_origin(self):
        # sinh(0) tanh(0) = 0 forces u(0) = -sqrt(|eps|)
        assert seed_function(-1.10, 0.0) == pytest.approx(-np.sqrt(1.10), abs=1e-15)

    def test_near_degenerate_limit_is_minus_sech(self):
        # at eps -> -1 the seed collapses to -sech(x)
        x = np.linspace(-5.0, 5.0, 101)
        u = seed_function(-1.0 - 1e-9, x)
        assert np.max(np.abs(u + 1.0 / np.cosh(x))) < 1e-7

    def test_frozen_high_precision_value(self):
        assert seed_function(-2.25, 1.5) == pytest.approx(SEED_AT_225_15, rel=1e-14)

    @pytest.mark.parametrize("eps", EPS_SWEEP)
    def test_even_and_node_free(self, eps, default_grid):
        u = seed_function(eps, default_grid.x)
        assert np.max(np.abs(u - u[::-1])) <= 1e-12 * np.max(np.abs(u))
        assert np.min(np.abs(u)) > 0.0

    def test_no_overflow_far_out(self):
        # scaled exponentials keep the ratio forms finite well past x ~ 700
        val = log_derivative_of_seed(-9.0, 500.0)
        assert np.isfinite(val)


class TestLogDerivative:
    @pytest.mark.parametrize("eps", EPS_SWEEP)
    def test_zero_at_origin(self, eps):
        assert log_derivative_of_seed(eps, 0.0) == 0.0

    def test_matches_finite_difference(self):
        h = 1e-5
        for x in [-3.2, -0.7, 0.4, 1.9, 6.0]:
            fd = (np.log(np.abs(seed_function(-1.10, x + h)))
                  - np.log(np.abs(seed_function(-1.10, x - h)))) / (2 * h)
            assert log_derivative_of_seed(-1.10, x) == pytest.approx(fd, abs=1e-8)

    def test_asymptote_is_sqrt_abs_eps(self):
        assert log_derivative_of_seed(-2.25, 20.0) == pytest.approx(1.5, abs=1e-6)
        assert log_derivative_of_seed(-2.25, -20.0) == pytest.approx(-1.5, abs=1e-6)

    def test_odd_parity(self, default_grid):
        v = log_derivative_of_seed(-1.7, default_grid.x)
        assert np.max(np.abs(v + v[::-1])) < 1e-12 * np.max(np.abs(v))


class TestPotential:
    def test_barrier_top_values(self):
        assert potential(-1.10, 0.0) == 2.0 * (1.0 + -1.10)
        assert potential(-2.25, 0.0) == -2.5

    def test_degenerate_limit_vanishes(self):
        # pointwise limit only: the residual wells migrate out to
        # |x| ~ -ln(delta)/2, so keep the window fixed while delta shrinks
        x = np.linspace(-5.0, 5.0, 201)
        v9 = np.max(np.abs(potential(-1.0 - 1e-9, x)))
        v6 = np.max(np.abs(potential(-1.0 - 1e-6, x)))
        assert v9 < 1e-4
        assert v9 < 1e-2 * v6  # vanishes linearly in 1 + eps

    @pytest.mark.parametrize("eps", EPS_SWEEP)
    def test_even_and_flat_at_infinity(self, eps, default_grid):
        v = potential(eps, default_grid.x)
        assert np.max(np.abs(v - v[::-1])) < 1e-12
        assert abs(v[0]) < 1e-6 and abs(v[-1]) < 1e-6

    @pytest.mark.parametrize("eps", EPS_SWEEP)
    def test_two_formulas_agree(self, eps, default_grid):
        explicit = potential(eps, default_grid.x)
        log_form = potential_log_form(eps, default_grid.x)
        assert np.max(np.abs(explicit - log_form)) < 1e-9

    def test_curve_invariants(self, default_grid):
        curve = potential_curve(-1.5, default_grid)
        assert curve.values[default_grid.center_index] == -1.0


class TestSeparatrixAndCurvature:
    def test_separatrix_closed_form(self):
        assert separatrix_energy(-1.10) == 2.0 * (1.0 + -1.10)
        assert separatrix_energy(-2.25) == -2.5
        # eps = -2 is the degenerate boundary: 2 eps + 2 = eps
        assert separatrix_energy(-2.0) == -2.0

    def test_curvature_closed_form(self):
        assert curvature_at_origin(-2.0) == -4.0
        assert abs(curvature_at_origin(-3.0 + 1e-13)) < 1e-11
        assert curvature_at_origin(-1.0 - 1e-9) == pytest.approx(0.0, abs=1e-7)

    @pytest.mark.parametrize("eps", np.linspace(-3.9, -1.02, 25).tolist())
    def test_matches_numerical_derivatives(self, eps):
        h = 1e-4
        xs = np.array([-2 * h, -h, 0.0, h, 2 * h])
        v = potential(eps, xs)
        assert v[2] == pytest.approx(separatrix_energy(eps), abs=1e-8)
        d2 = (-v[0] + 16 * v[1] - 30 * v[2] + 16 * v[3] - v[4]) / (12 * h * h)
        assert d2 == pytest.approx(curvature_at_origin(eps), rel=1e-5)

    @pytest.mark.parametrize("eps", np.linspace(-4.0, -1.001, 41).tolist())
    def test_double_well_iff_interval(self, eps):
        if eps == -3.0:
            return
        assert (curvature_at_origin(eps) < 0) == (-3.0 < eps < -1.0)


class TestGroundState:
    @pytest.mark.parametrize("eps", [-1.05, -1.10, -2.0, -2.25, -3.5])
    def test_normalized_even_positive(self, eps, default_grid):
        psi = ground_state(eps, default_grid)
        assert psi.norm_squared() == pytest.approx(1.0, abs=1e-10)
        assert np.all(psi.samples > 0.0)
        assert np.max(np.abs(psi.samples - psi.samples[::-1])) < 1e-12

    def test_maxima_counts(self, default_grid):
        from shallowdw import count_density_maxima

        rho_bimodal = RealWave(default_grid,
                               ground_state(-1.10, default_grid).samples ** 2)
        rho_central = RealWave(default_grid,
                               ground_state(-2.25, default_grid).samples ** 2)
        assert count_density_maxima(rho_bimodal) == 2
        assert count_density_maxima(rho_central) == 1

    def test_grid_too_narrow(self):
        with pytest.raises(GridTooNarrow):
            ground_state(-1.05, Grid.symmetric(5.0, 1001))


class TestBaseGroundState:
    def test_center_value_and_parity(self, default_grid):
        phi = base_ground_state(default_grid)
        assert phi.samples[default_grid.center_index] == pytest.approx(
            np.sqrt(0.5), abs=1e-12)
        # linspace nodes mirror only to rounding, so parity does too
        assert np.max(np.abs(phi.samples - phi.samples[::-1])) < 1e-15
        assert phi.norm_squared() == pytest.approx(1.0, abs=1e-10)

    def test_narrow_grid_rejected(self):
        with pytest.raises(GridTooNarrow):
            base_ground_state(Grid.symmetric(8.0, 1601))


class TestLadderOperators:
    def test_a_dagger_annihilates_inverse_seed(self, default_grid):
        f = RealWave(default_grid, 1.0 / seed_function(-1.5, default_grid.x))
        out = apply_a_dagger(-1.5, f).samples
        interior = slice(2, -2)
        assert np.max(np.abs(out[interior])) < 1e-8 * np.max(np.abs(f.samples))

    def test_a_dagger_linearity_zero(self, default_grid):
        zero = RealWave(default_grid, np.zeros(default_grid.n_points))
        assert np.array_equal(apply_a_dagger(-1.5, zero).samples, zero.samples)

    def test_factorization_recovers_base_eigenvalue(self, default_grid):
        # (A+ A + eps) phi0 = -phi0 for every eps
        eps = -1.5
        phi = base_ground_state(default_grid)
        out = apply_a_dagger(eps, apply_a(eps, phi)).samples + eps * phi.samples
        interior = slice(4, -4)
        assert np.max(np.abs(out[interior] + phi.samples[interior])) < 1e-6

    def test_a_phi0_is_excited_state(self, default_grid):
        eps = -1.5
        raw = apply_a(eps, base_ground_state(default_grid))
        wave = raw.normalize()
        psi1 = excited_state(eps, default_grid)
        sign = np.sign(wave.samples[default_grid.center_index + 1])
        assert np.max(np.abs(sign * wave.samples - psi1.samples)) < 1e-8

    def test_parity_flip(self, default_grid):
        # odd input -> even output: both -d/dx and u'/u flip parity
        odd = RealWave(default_grid,
                       np.sin(default_grid.x) * np.exp(-default_grid.x**2))
        out = apply_a(-2.25, odd).samples
        interior = slice(3, -3)
        mirrored = out[::-1]
        assert np.max(np.abs(out[interior] - mirrored[interior])) < 1e-9


class TestExcitedState:
    @pytest.mark.parametrize("eps", [-1.05, -1.5, -2.25, -2.95])
    def test_odd_single_node_normalized(self, eps, default_grid):
        psi = excited_state(eps, default_grid)
        mid = default_grid.center_index
        assert psi.samples[mid] == 0.0
        assert psi.norm_squared() == pytest.approx(1.0, abs=1e-10)
        assert np.max(np.abs(psi.samples + psi.samples[::-1])) < 1e-12
        sign_changes = np.sum(np.diff(np.sign(psi.samples[np.abs(psi.samples) > 0])) != 0)
        assert sign_changes == 1
        assert psi.samples[mid + 1] > 0.0  # sign convention

    def test_orthogonal_to_ground(self, default_grid):
        psi0 = ground_state(-1.5, default_grid)
        psi1 = excited_state(-1.5, default_grid)
        assert abs(psi0.overlap(psi1)) < 1e-10
