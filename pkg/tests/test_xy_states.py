import numpy as np
import pytest

from catchain import exact_diag as ed
from catchain.xy_states import (
    concurrence_symmetric,
    cos_2alpha,
    default_lambda_grid,
    factorization_data,
    genfun_cross,
    genfun_factorized,
    genfun_symmetric,
)


def factorized_pair(gamma, n):
    alpha = factorization_data(gamma, n).alpha
    return (
        ed.build_product_state([(alpha, 0.0)] * n),
        ed.build_product_state([(-alpha, 0.0)] * n),
    )


def cat_state(gamma, n, branch):
    plus, minus = factorized_pair(gamma, n)
    return ed.symmetrize_state([plus, minus], [1.0, float(branch)])


class TestFactorizationData:
    def test_reference_angles(self):
        data = factorization_data(0.6, 8)
        assert data.c == pytest.approx(0.5, abs=1e-15)
        assert data.alpha == pytest.approx(np.pi / 6, abs=1e-15)

    def test_expansion_coefficients_n4(self):
        data = factorization_data(0.6, 4)
        assert data.u_plus == pytest.approx(np.sqrt(17 / 32), abs=1e-15)
        assert data.u_minus == pytest.approx(np.sqrt(15 / 32), abs=1e-15)
        assert data.overlap == pytest.approx(0.5 ** 4, abs=1e-15)

    def test_normalization_and_overlap_identities(self):
        rng = np.random.default_rng(2)
        for _ in range(20):
            gamma = float(rng.uniform(0.05, 1.0))
            n = int(rng.integers(4, 30))
            data = factorization_data(gamma, n)
            assert data.u_plus ** 2 + data.u_minus ** 2 == pytest.approx(1, abs=1e-14)
            assert data.u_plus ** 2 - data.u_minus ** 2 == pytest.approx(
                data.overlap, abs=1e-14
            )

    def test_overlap_matches_oracle_dot_product(self):
        plus, minus = factorized_pair(0.6, 4)
        dot = complex(np.vdot(plus.amplitudes, minus.amplitudes))
        assert dot == pytest.approx(1 / 16, abs=1e-14)
        assert factorization_data(0.6, 4).overlap == pytest.approx(dot.real, abs=1e-14)

    def test_overlap_decays_monotonically(self):
        overlaps = [factorization_data(0.6, n).overlap for n in range(4, 40, 2)]
        assert all(a > b for a, b in zip(overlaps, overlaps[1:]))

    def test_large_n_limit(self):
        data = factorization_data(0.6, 400)
        assert data.u_plus == pytest.approx(1 / np.sqrt(2), abs=1e-12)
        assert data.u_minus == pytest.approx(1 / np.sqrt(2), abs=1e-12)


class TestConcurrenceSymmetric:
    def test_reference_value_n4(self):
        c = concurrence_symmetric(0.6, 4, +1)
        assert c.closed_form == pytest.approx(3 / 17, abs=1e-15)

    def test_vanishes_on_isotropic_xx_line(self):
        assert concurrence_symmetric(1.0, 8, +1).closed_form == 0.0

    def test_gamma_zero_rejected(self):
        with pytest.raises(ValueError, match="non-analytic"):
            concurrence_symmetric(0.0, 8, +1)

    def test_log_slope_is_log_decay_base(self):
        sizes = np.arange(10, 42, 2)
        values = np.array(
            [concurrence_symmetric(0.6, int(n), +1).closed_form for n in sizes]
        )
        slope = np.polyfit(sizes, np.log(values), 1)[0]
        assert slope == pytest.approx(np.log(0.5), rel=0.05)

    def test_decay_base(self):
        c = concurrence_symmetric(0.6, 8, +1)
        assert c.decay_base == pytest.approx(np.sqrt(0.4 / 1.6), abs=1e-15)
        assert c.decay_base == pytest.approx(cos_2alpha(0.6), abs=1e-15)

    def test_odd_branch_at_least_as_entangled(self):
        rng = np.random.default_rng(9)
        for _ in range(20):
            gamma = float(rng.uniform(0.05, 0.99))
            n = int(2 * rng.integers(2, 15))
            plus = concurrence_symmetric(gamma, n, +1).closed_form
            minus = concurrence_symmetric(gamma, n, -1).closed_form
            assert minus >= plus

    def test_p_terms_match_oracle_rdm(self):
        n, gamma = 6, 0.6
        for branch in (+1, -1):
            rho = ed.reduce_two_spin(cat_state(gamma, n, branch), 0, 1).matrix
            c = concurrence_symmetric(gamma, n, branch)
            p_off_oracle = float((rho[0, 3] + rho[3, 0]).real)
            p_iii_oracle = float(rho[1, 1].real)
            assert c.p_offdiag == pytest.approx(p_off_oracle, abs=1e-12)
            assert c.p_iii == pytest.approx(p_iii_oracle, abs=1e-12)
            assert c.c_simplified == pytest.approx(
                0.5 * abs(p_off_oracle) - p_iii_oracle, abs=1e-12
            )

    def test_closed_form_equals_oracle_wootters(self):
        for n in (4, 6, 8):
            for branch in (+1, -1):
                cw = ed.wootters_concurrence(
                    ed.reduce_two_spin(cat_state(0.6, n, branch), 0, 1)
                )
                closed = concurrence_symmetric(0.6, n, branch).closed_form
                assert cw == pytest.approx(closed, abs=1e-12)

    def test_pair_independence(self):
        cat = cat_state(0.6, 6, +1)
        c01 = ed.wootters_concurrence(ed.reduce_two_spin(cat, 0, 1))
        c03 = ed.wootters_concurrence(ed.reduce_two_spin(cat, 0, 3))
        assert c01 == pytest.approx(c03, abs=1e-12)


class TestGenFunFactorized:
    def test_normalized_at_zero(self):
        series = genfun_factorized(0.6, 8, +1, np.array([0.0]))
        assert series.values[0] == pytest.approx(1.0 + 0j, abs=1e-15)

    def test_isotropic_xx_line_is_pure_phase(self):
        lam = np.array([-2.0, 0.4, 3.3])
        series = genfun_factorized(1.0, 8, +1, lam)
        assert np.allclose(series.values, np.exp(1j * lam), atol=1e-13)

    def test_matches_oracle_matrix_element(self):
        n, gamma = 8, 0.6
        plus, minus = factorized_pair(gamma, n)
        for branch, state in ((+1, plus), (-1, minus)):
            series = genfun_factorized(gamma, n, branch, np.array([1.0]))
            oracle = ed.genfun_matrix_element(state, state, 1.0)
            assert abs(series.values[0] - oracle) < 1e-12

    def test_conjugation_symmetry(self):
        lam = np.array([0.3, 1.7, 4.0])
        plus = genfun_factorized(0.6, 10, +1, lam).values
        minus_lam = genfun_factorized(0.6, 10, +1, -lam).values
        assert np.allclose(minus_lam, plus.conj(), atol=1e-14)


class TestGenFunCross:
    def test_overlap_at_zero(self):
        series = genfun_cross(0.6, 8, np.array([0.0]))
        assert series.values[0] == pytest.approx(0.5 ** 8, abs=1e-15)

    def test_closed_form_and_oracle(self):
        n, gamma, lam = 8, 0.6, 1.0
        series = genfun_cross(gamma, n, np.array([lam]))
        expected = (np.cos(lam / n) * 0.5) ** n
        assert series.values[0] == pytest.approx(expected, abs=1e-15)
        plus, minus = factorized_pair(gamma, n)
        oracle = ed.genfun_matrix_element(plus, minus, lam)
        assert abs(series.values[0] - oracle) < 1e-12

    def test_bounded_by_overlap(self):
        lam = default_lambda_grid(10.0, 101)
        values = genfun_cross(0.6, 12, lam).values
        assert np.all(np.abs(values) <= 0.5 ** 12 + 1e-15)


class TestGenFunSymmetric:
    @pytest.mark.parametrize("branch", [+1, -1])
    def test_normalized_at_zero(self, branch):
        series, delta = genfun_symmetric(0.6, 8, branch, np.array([0.0]))
        assert series.values[0] == pytest.approx(1.0 + 0j, abs=1e-14)
        assert abs(delta.values[0]) < 1e-14

    @pytest.mark.parametrize("branch", [+1, -1])
    def test_matches_oracle_superposition(self, branch):
        n, gamma = 8, 0.6
        cat = cat_state(gamma, n, branch)
        lam = np.array([1.0])
        series, _ = genfun_symmetric(gamma, n, branch, lam)
        oracle = ed.genfun_matrix_element(cat, cat, 1.0)
        assert abs(series.values[0] - oracle) < 1e-10

    def test_assembly_consistent_on_grid(self):
        # pointwise agreement with the explicitly built superposition state
        n, gamma = 10, 0.6
        lam = np.linspace(-5.0, 5.0, 21)
        for branch in (+1, -1):
            cat = cat_state(gamma, n, branch)
            series, _ = genfun_symmetric(gamma, n, branch, lam)
            for i, l in enumerate(lam):
                oracle = ed.genfun_matrix_element(cat, cat, float(l))
                assert abs(series.values[i] - oracle) < 1e-10

    def test_deficit_decays_exponentially(self):
        lam = np.array([1.0])
        deltas = {
            n: abs(genfun_symmetric(0.6, n, +1, lam)[1].values[0])
            for n in (8, 12, 16)
        }
        slope = np.polyfit(
            [8, 12, 16], np.log([deltas[8], deltas[12], deltas[16]]), 1
        )[0]
        assert slope == pytest.approx(np.log(0.5), rel=0.10)

    def test_conjugation_symmetry(self):
        lam = np.array([0.5, 2.0])
        plus = genfun_symmetric(0.6, 8, +1, lam)[0].values
        neg = genfun_symmetric(0.6, 8, +1, -lam)[0].values
        assert np.allclose(neg, plus.conj(), atol=1e-14)
