import math

import numpy as np
import pytest

from catchain.quadrature import (
    gaussian_ratio_asymptote,
    integrate_periodic_1d,
    integrate_periodic_2d,
    periodic_grid,
)


def closed_form_cos_power(n: int) -> float:
    """Independent oracle: integral of cos^n over one period, n even."""
    return 2.0 * np.pi * math.comb(n, n // 2) / 2.0 ** n


class TestPeriodicGrid:
    def test_nodes_and_weight(self):
        grid = periodic_grid(10)
        assert grid.n_nodes == 10
        assert np.all(np.diff(grid.nodes) > 0)
        assert grid.weight * grid.n_nodes == pytest.approx(2.0 * np.pi, abs=1e-15)
        assert grid.nodes[0] == 0.0
        assert grid.nodes[-1] < 2.0 * np.pi

    @pytest.mark.parametrize("bad", [0, 1, -3])
    def test_too_few_nodes_rejected(self, bad):
        with pytest.raises(ValueError):
            periodic_grid(bad)


class TestIntegrate1D:
    def test_constant(self):
        grid = periodic_grid(7)
        assert integrate_periodic_1d(lambda t: np.ones_like(t), grid) == pytest.approx(
            2.0 * np.pi, abs=1e-14
        )

    def test_cos_squared(self):
        grid = periodic_grid(4)
        result = integrate_periodic_1d(lambda t: np.cos(t) ** 2, grid)
        assert result == pytest.approx(np.pi, abs=1e-14)

    def test_shifted_cos_power_matches_binomial(self):
        n = 20
        grid = periodic_grid(2 * n + 8)
        result = integrate_periodic_1d(lambda t: np.cos(t - 0.37) ** n, grid)
        assert result.real == pytest.approx(closed_form_cos_power(n), rel=1e-13)
        assert abs(result.imag) < 1e-15

    def test_monomial_exactness(self):
        # exp(i m t) integrates to 2 pi only at m = 0, for every |m| < n_nodes
        grid = periodic_grid(9)
        for m in range(-8, 9):
            result = integrate_periodic_1d(lambda t: np.exp(1j * m * t), grid)
            expected = 2.0 * np.pi if m == 0 else 0.0
            assert abs(result - expected) < 1e-14

    def test_random_trig_polynomial(self):
        # the rule picks out the zeroth Fourier coefficient exactly
        rng = np.random.default_rng(7)
        n_nodes = 16
        grid = periodic_grid(n_nodes)
        for _ in range(20):
            orders = np.arange(-(n_nodes - 1), n_nodes)
            coeffs = rng.normal(size=orders.size) + 1j * rng.normal(size=orders.size)
            result = integrate_periodic_1d(
                lambda t: (coeffs[:, None] * np.exp(1j * orders[:, None] * t)).sum(0),
                grid,
            )
            expected = 2.0 * np.pi * coeffs[orders.size // 2]
            assert abs(result - expected) < 1e-12

    def test_determinism(self):
        grid = periodic_grid(33)
        f = lambda t: np.cos(t - 0.1) ** 12 + 1j * np.sin(3 * t)
        assert integrate_periodic_1d(f, grid) == integrate_periodic_1d(f, grid)


class TestIntegrate2D:
    def test_constant(self):
        grid = periodic_grid(5)
        result = integrate_periodic_2d(lambda t, tp: np.ones_like(t), grid)
        assert result == pytest.approx((2.0 * np.pi) ** 2, rel=1e-14)

    def test_difference_kernel_matches_binomial(self):
        n = 12
        grid = periodic_grid(2 * n + 8)
        result = integrate_periodic_2d(lambda t, tp: np.cos(t - tp) ** n, grid)
        expected = 2.0 * np.pi * closed_form_cos_power(n)
        assert result.real == pytest.approx(expected, rel=1e-13)

    def test_odd_harmonic_vanishes(self):
        grid = periodic_grid(8)
        result = integrate_periodic_2d(lambda t, tp: np.sin(t + tp), grid)
        assert abs(result) < 1e-13


class TestGaussianRatio:
    def test_values(self):
        assert gaussian_ratio_asymptote(2) == pytest.approx(0.25)
        assert gaussian_ratio_asymptote(100) == pytest.approx(0.005)

    def test_matches_quadrature_concurrence_at_large_n(self):
        from catchain.xxx_chain import xxx_concurrence

        n = 200
        exact = xxx_concurrence(n).c_simplified
        assert gaussian_ratio_asymptote(n) == pytest.approx(exact, rel=0.01)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            gaussian_ratio_asymptote(0)
