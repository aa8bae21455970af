"""Cross-validation of every closed-form result against the dense oracle.

Each check emits one row per comparison (check name, parameters, analytic
value, oracle value, absolute difference, tolerance, pass flag).  The CLI
``oracle-validate`` command runs the whole registry and exits nonzero if any
row fails; the test suite reuses the same functions.  Random parameter draws
are seeded per check, so the emitted table is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import exact_diag as ed
from . import xxx_chain, xy_chain, xy_states
from .params import Parity, xy_params, xxx_params
from .tables import CsvTable


@dataclass(frozen=True)
class ValidationConfig:
    """Scope of the validation run (sizes capped by the dense-oracle limit)."""

    oracle_cap: int = ed.DEFAULT_SITE_CAP
    ed_sizes: tuple[int, ...] = (4, 6, 8, 10, 12)
    n_random_points: int = 20
    seed: int = 20260808
    crossing_step: float = xy_chain.DEFAULT_CROSSING_STEP
    crossing_tol: float = xy_chain.DEFAULT_CROSSING_TOL

    def __post_init__(self) -> None:
        if any(n > self.oracle_cap for n in self.ed_sizes):
            raise ValueError(
                f"requested dense sizes {self.ed_sizes} exceed the oracle "
                f"cap {self.oracle_cap}"
            )


@dataclass
class CheckRow:
    check: str
    n_sites: int | None
    gamma: float | None
    h: float | None
    analytic: float
    oracle: float
    tolerance: float

    @property
    def abs_diff(self) -> float:
        return abs(self.analytic - self.oracle)

    @property
    def passed(self) -> bool:
        return self.abs_diff <= self.tolerance


def _factorized_pair(gamma: float, n: int) -> tuple[ed.DenseState, ed.DenseState]:
    alpha = xy_states.factorization_data(gamma, n).alpha
    plus = ed.build_product_state([(alpha, 0.0)] * n)
    minus = ed.build_product_state([(-alpha, 0.0)] * n)
    return plus, minus


def _cat_state(gamma: float, n: int, branch: int) -> ed.DenseState:
    plus, minus = _factorized_pair(gamma, n)
    return ed.symmetrize_state([plus, minus], [1.0, float(branch)])


def _symmetric_xxx_state(n: int) -> ed.DenseState:
    grid = xxx_chain.manifold_grid(n)
    states = [ed.build_product_state([(t, 0.0)] * n) for t in grid.nodes]
    return ed.symmetrize_state(states, [1.0] * grid.n_nodes)


# --------------------------------------------------------------------------
# individual checks
# --------------------------------------------------------------------------

def check_xy_factorizing_degeneracy(cfg: ValidationConfig) -> list[CheckRow]:
    rows = []
    for n in cfg.ed_sizes:
        for gamma in (0.3, 0.6, 0.9):
            hf = xy_chain.factorizing_field(gamma)
            p = xy_params(n, gamma, hf)
            e_even = xy_chain.sector_spectrum(p, Parity.EVEN).lowest_physical_energy
            e_odd = xy_chain.sector_spectrum(p, Parity.ODD).lowest_physical_energy
            rows.append(
                CheckRow("xy_factorizing_degeneracy", n, gamma, hf, e_even, e_odd, 1e-10)
            )
    return rows


def check_xy_sector_minima_vs_ed(cfg: ValidationConfig) -> list[CheckRow]:
    rows = []
    rng = np.random.default_rng(cfg.seed)
    for n in cfg.ed_sizes:
        for _ in range(cfg.n_random_points):
            gamma = float(rng.uniform(0.05, 1.0))
            h = float(rng.uniform(0.0, 2.0))
            p = xy_params(n, gamma, h)
            ff_even = xy_chain.sector_spectrum(p, Parity.EVEN).lowest_physical_energy
            ff_odd = xy_chain.sector_spectrum(p, Parity.ODD).lowest_physical_energy
            ed_even, ed_odd = ed.sector_minima(p, site_cap=cfg.oracle_cap)
            rows.append(
                CheckRow("xy_even_min_vs_ed", n, gamma, h, ff_even, ed_even,
                         1e-9 * abs(ed_even))
            )
            rows.append(
                CheckRow("xy_odd_min_vs_ed", n, gamma, h, ff_odd, ed_odd,
                         1e-9 * abs(ed_odd))
            )
    return rows


def check_xy_crossings(cfg: ValidationConfig) -> list[CheckRow]:
    rows = []
    for n in (4, 6, 8, 10):
        for gamma in (0.3, 0.6):
            cs = xy_chain.find_crossings(
                xy_params(n, gamma, 0.0), cfg.crossing_step, cfg.crossing_tol
            )
            rows.append(
                CheckRow("xy_crossing_count", n, gamma, None,
                         float(n // 2), float(len(cs.crossings)), 0.0)
            )
            rows.append(
                CheckRow("xy_last_crossing_is_hf", n, gamma, None,
                         xy_chain.factorizing_field(gamma),
                         float(cs.crossings[-1]), 1e-6)
            )
    return rows


def check_xy_crossings_vs_ed(cfg: ValidationConfig) -> list[CheckRow]:
    """Count and locate crossings from the dense spectra alone (N = 4, 6)."""
    rows = []
    gamma = 0.6
    for n in (4, 6):
        def gap(h: float) -> float:
            e_even, e_odd = ed.sector_minima(xy_params(n, gamma, h))
            return e_odd - e_even

        grid = np.linspace(0.002, 1.0, 500)
        values = np.array([gap(h) for h in grid])
        brackets = np.nonzero(np.sign(values[:-1]) * np.sign(values[1:]) < 0)[0]
        crossings = []
        for i in brackets:
            lo, hi = float(grid[i]), float(grid[i + 1])
            f_lo = values[i]
            while hi - lo > 1e-8:
                mid = 0.5 * (lo + hi)
                f_mid = gap(mid)
                if f_lo * f_mid < 0:
                    hi = mid
                else:
                    lo, f_lo = mid, f_mid
            crossings.append(0.5 * (lo + hi))
        rows.append(
            CheckRow("xy_crossing_count_ed", n, gamma, None,
                     float(n // 2), float(len(crossings)), 0.0)
        )
        rows.append(
            CheckRow("xy_last_crossing_ed", n, gamma, None,
                     xy_chain.factorizing_field(gamma), crossings[-1], 1e-6)
        )
    return rows


def check_xy_gap_above_critical(cfg: ValidationConfig) -> list[CheckRow]:
    h = 2.0
    p = xy_params(64, 0.6, h)
    gap = (
        xy_chain.sector_spectrum(p, Parity.ODD).lowest_physical_energy
        - xy_chain.sector_spectrum(p, Parity.EVEN).lowest_physical_energy
    )
    return [CheckRow("xy_gap_above_critical", 64, 0.6, h, 2.0 * (h - 1.0), gap, 1e-6)]


def check_xy_factorized_residual(cfg: ValidationConfig) -> list[CheckRow]:
    rows = []
    n = 8
    for gamma in (0.3, 0.6, 0.9):
        hf = xy_chain.factorizing_field(gamma)
        H = ed.build_hamiltonian(xy_params(n, gamma, hf), site_cap=cfg.oracle_cap)
        for branch, psi in zip((+1, -1), _factorized_pair(gamma, n)):
            residual = float(
                np.linalg.norm(H @ psi.amplitudes - (-n) * psi.amplitudes)
            )
            rows.append(
                CheckRow("xy_factorized_residual", n, gamma, hf, 0.0, residual, 1e-10)
            )
    return rows


def check_xy_genfun_vs_ed(cfg: ValidationConfig) -> list[CheckRow]:
    rows = []
    n, gamma = 8, 0.6
    lam_values = np.array([-3.0, -1.0, 0.0, 0.7, 1.0, 2.5])
    plus, minus = _factorized_pair(gamma, n)
    fact_plus = xy_states.genfun_factorized(gamma, n, +1, lam_values).values
    fact_minus = xy_states.genfun_factorized(gamma, n, -1, lam_values).values
    cross = xy_states.genfun_cross(gamma, n, lam_values).values
    for i, lam in enumerate(lam_values):
        rows.append(
            CheckRow("xy_genfun_factorized_vs_ed", n, gamma, None,
                     0.0,
                     abs(fact_plus[i] - ed.genfun_matrix_element(plus, plus, lam)),
                     1e-12)
        )
        rows.append(
            CheckRow("xy_genfun_factorized_vs_ed", n, gamma, None,
                     0.0,
                     abs(fact_minus[i] - ed.genfun_matrix_element(minus, minus, lam)),
                     1e-12)
        )
        rows.append(
            CheckRow("xy_genfun_cross_vs_ed", n, gamma, None,
                     0.0,
                     abs(cross[i] - ed.genfun_matrix_element(plus, minus, lam)),
                     1e-12)
        )
    for branch in (+1, -1):
        cat = _cat_state(gamma, n, branch)
        g_sym = xy_states.genfun_symmetric(gamma, n, branch, lam_values)[0].values
        for i, lam in enumerate(lam_values):
            rows.append(
                CheckRow("xy_genfun_symmetric_vs_ed", n, gamma, None,
                         0.0,
                         abs(g_sym[i] - ed.genfun_matrix_element(cat, cat, lam)),
                         1e-10)
            )
    return rows


def check_xy_genfun_assembly(cfg: ValidationConfig) -> list[CheckRow]:
    """Assembled cat-state series vs the explicitly constructed superposition."""
    rows = []
    n, gamma = 10, 0.6
    lam_values = np.linspace(-5.0, 5.0, 21)
    for branch in (+1, -1):
        cat = _cat_state(gamma, n, branch)
        series = xy_states.genfun_symmetric(gamma, n, branch, lam_values)[0].values
        for i, lam in enumerate(lam_values):
            rows.append(
                CheckRow("xy_genfun_assembly", n, gamma, None,
                         0.0,
                         abs(series[i] - ed.genfun_matrix_element(cat, cat, lam)),
                         1e-10)
            )
    return rows


def check_xy_wootters_ratio(cfg: ValidationConfig) -> list[CheckRow]:
    rows = []
    sizes = (4, 6, 8, 10)
    for gamma in (0.3, 0.6, 0.9):
        ratios = []
        for n in sizes:
            cat = _cat_state(gamma, n, +1)
            cw = ed.wootters_concurrence(ed.reduce_two_spin(cat, 0, 1))
            c_simplified = xy_states.concurrence_symmetric(gamma, n, +1).c_simplified
            ratios.append(cw / c_simplified)
        for n, ratio in zip(sizes, ratios):
            rows.append(
                CheckRow("xy_wootters_ratio_constant", n, gamma, None,
                         ratios[0], ratio, 1e-6 * abs(ratios[0]))
            )
    return rows


def _total_spin_matrix(n: int, axis: str) -> np.ndarray:
    dim = 1 << n
    s = np.arange(dim)
    bits = ed._site_bits(s, n)
    out = np.zeros((dim, dim), dtype=complex)
    for l in range(n):
        t = s ^ (1 << l)
        if axis == "x":
            out[t, s] += 1.0
        elif axis == "y":
            out[t, s] += 1j * (1.0 - 2.0 * bits[:, l])
        else:
            out[s, s] += 1.0 - 2.0 * bits[:, l]
    return out


def check_ed_commutators(cfg: ValidationConfig) -> list[CheckRow]:
    rows = []
    n = 6
    H_xy = ed.build_hamiltonian(xy_params(n, 0.6, 0.7))
    P = np.diag(ed.parity_diagonal(n))
    rows.append(
        CheckRow("ed_xy_parity_commutator", n, 0.6, 0.7, 0.0,
                 float(np.linalg.norm(H_xy @ P - P @ H_xy, 2)), 1e-12)
    )
    H_xxx = ed.build_hamiltonian(xxx_params(n))
    for axis in ("x", "y", "z"):
        S = _total_spin_matrix(n, axis)
        rows.append(
            CheckRow(f"ed_xxx_total_s{axis}_commutator", n, None, None, 0.0,
                     float(np.linalg.norm(H_xxx @ S - S @ H_xxx, 2)), 1e-12)
        )
    return rows


def check_xxx_ground_manifold(cfg: ValidationConfig) -> list[CheckRow]:
    rows = []
    for n in (4, 6, 8):
        H = ed.build_hamiltonian(xxx_params(n), site_cap=cfg.oracle_cap)
        e0, degeneracy = ed.ground_state_degeneracy(H, degeneracy_tol=1e-8)
        rows.append(CheckRow("xxx_ground_energy", n, None, None, float(-n), e0, 1e-10))
        rows.append(
            CheckRow("xxx_ground_degeneracy", n, None, None,
                     float(n + 1), float(degeneracy), 0.0)
        )
        for theta in (0.0, 0.4, 1.1, 2.2):
            psi = ed.build_product_state([(theta, 0.0)] * n)
            residual = float(
                np.linalg.norm(H @ psi.amplitudes - (-n) * psi.amplitudes)
            )
            rows.append(
                CheckRow("xxx_membership_residual", n, None, None, 0.0, residual, 1e-10)
            )
    return rows


def check_xxx_symmetric_parity(cfg: ValidationConfig) -> list[CheckRow]:
    rows = []
    for n in (4, 6):
        psi = _symmetric_xxx_state(n)
        bits = ed._site_bits(np.arange(1 << n), n)
        odd = bits.sum(axis=1) % 2 == 1
        rows.append(
            CheckRow("xxx_symmetric_odd_amplitudes", n, None, None, 0.0,
                     float(np.abs(psi.amplitudes[odd]).sum()), 1e-14)
        )
    return rows


def check_xxx_overlap_kernel(cfg: ValidationConfig) -> list[CheckRow]:
    rows = []
    n = 10
    pairs = [
        ((0.3, 0.0), (0.7, 0.0)),
        ((0.2, 0.5), (1.3, 2.1)),
        ((0.9, 1.0), (0.9, 1.0)),
    ]
    for (t1, p1), (t2, p2) in pairs:
        kernel = xxx_chain.overlap_kernel(
            xxx_chain.BlochProductState(t1, p1, n),
            xxx_chain.BlochProductState(t2, p2, n),
        )
        bra = ed.build_product_state([(t1, p1)] * n)
        ket = ed.build_product_state([(t2, p2)] * n)
        dot = complex(np.vdot(bra.amplitudes, ket.amplitudes))
        rows.append(
            CheckRow("xxx_overlap_kernel_vs_ed", n, None, None, 0.0,
                     abs(kernel - dot), 1e-13)
        )
    return rows


def check_xxx_norm_quadrature(cfg: ValidationConfig) -> list[CheckRow]:
    rows = []
    for n in (4, 12, 40):
        closed = xxx_chain.xxx_norm_sq_closed_form(n)
        quad = xxx_chain.xxx_norm_sq(n)
        rows.append(
            CheckRow("xxx_norm_quadrature", n, None, None, closed, quad, 1e-12 * closed)
        )
    return rows


def check_xxx_concurrence_exact(cfg: ValidationConfig) -> list[CheckRow]:
    rows = []
    for n in range(4, 42, 2):
        c = xxx_chain.xxx_concurrence(n)
        rows.append(
            CheckRow("xxx_concurrence_exact", n, None, None,
                     c.closed_form, c.c_simplified, 1e-12)
        )
    n = 200
    exact = xxx_chain.xxx_concurrence(n).c_simplified
    rows.append(
        CheckRow("xxx_concurrence_asymptote", n, None, None,
                 exact, xxx_chain.xxx_concurrence_asymptotic(n), 0.01 * exact)
    )
    return rows


def check_xxx_wootters_ratio(cfg: ValidationConfig) -> list[CheckRow]:
    rows = []
    ratios = []
    sizes = (4, 6, 8)
    for n in sizes:
        psi = _symmetric_xxx_state(n)
        cw = ed.wootters_concurrence(ed.reduce_two_spin(psi, 0, 1))
        ratios.append(cw / xxx_chain.xxx_concurrence(n).c_simplified)
    for n, ratio in zip(sizes, ratios):
        rows.append(
            CheckRow("xxx_wootters_ratio_constant", n, None, None,
                     ratios[0], ratio, 1e-6 * abs(ratios[0]))
        )
    return rows


def check_xxx_genfun_vs_ed(cfg: ValidationConfig) -> list[CheckRow]:
    rows = []
    lam_values = np.array([0.0, 1.0, 2.0, -3.0])
    n, theta = 12, 0.5
    member = xxx_chain.xxx_genfun_member(theta, n, lam_values).values
    psi = ed.build_product_state([(theta, 0.0)] * n)
    for i, lam in enumerate(lam_values):
        rows.append(
            CheckRow("xxx_genfun_member_vs_ed", n, None, None, 0.0,
                     abs(member[i] - ed.genfun_matrix_element(psi, psi, lam)), 1e-12)
        )
    n = 6
    sym = xxx_chain.xxx_genfun_symmetric(n, lam_values).genfun.values
    psi = _symmetric_xxx_state(n)
    for i, lam in enumerate(lam_values):
        rows.append(
            CheckRow("xxx_genfun_symmetric_vs_ed", n, None, None, 0.0,
                     abs(sym[i] - ed.genfun_matrix_element(psi, psi, lam)), 1e-12)
        )
    return rows


def check_xy_delta_g_scaling(cfg: ValidationConfig) -> list[CheckRow]:
    rows = []
    gamma, lam = 0.6, np.array([1.0])
    c4 = xy_states.cos_2alpha(gamma) ** 4
    deltas = {
        n: abs(xy_states.genfun_symmetric(gamma, n, +1, lam)[1].values[0])
        for n in (8, 12, 16, 20, 24)
    }
    for n in (8, 12, 16, 20):
        ratio = deltas[n + 4] / deltas[n]
        rows.append(
            CheckRow("xy_delta_g_ratio", n, gamma, None, c4, ratio, 0.10 * c4)
        )
    return rows


def check_xxx_delta_g_scaling(cfg: ValidationConfig) -> list[CheckRow]:
    rows = []
    lam = np.array([1.0])
    results = {n: xxx_chain.xxx_genfun_symmetric(n, lam) for n in (200, 400)}
    scaled = {n: n * abs(r.delta.values[0]) for n, r in results.items()}
    rows.append(
        CheckRow("xxx_delta_g_1_over_n", 400, None, None,
                 scaled[200], scaled[400], 0.05 * scaled[200])
    )
    for n, r in results.items():
        d, sd = abs(r.delta.values[0]), abs(r.delta_steepest.values[0])
        rows.append(
            CheckRow("xxx_delta_g_steepest_descent", n, None, None, d, sd, 0.05 * d)
        )
    return rows


#: Registry executed by ``oracle-validate`` (order fixed for reproducible CSV).
ALL_CHECKS: tuple[Callable[[ValidationConfig], list[CheckRow]], ...] = (
    check_xy_factorizing_degeneracy,
    check_xy_sector_minima_vs_ed,
    check_xy_crossings,
    check_xy_crossings_vs_ed,
    check_xy_gap_above_critical,
    check_xy_factorized_residual,
    check_xy_genfun_vs_ed,
    check_xy_genfun_assembly,
    check_xy_wootters_ratio,
    check_ed_commutators,
    check_xxx_ground_manifold,
    check_xxx_symmetric_parity,
    check_xxx_overlap_kernel,
    check_xxx_norm_quadrature,
    check_xxx_concurrence_exact,
    check_xxx_wootters_ratio,
    check_xxx_genfun_vs_ed,
    check_xy_delta_g_scaling,
    check_xxx_delta_g_scaling,
)


def run_validation(
    cfg: ValidationConfig | None = None,
    checks: tuple[Callable[[ValidationConfig], list[CheckRow]], ...] = ALL_CHECKS,
) -> list[CheckRow]:
    """Run the registry and return every comparison row."""
    cfg = cfg or ValidationConfig()
    rows: list[CheckRow] = []
    for check in checks:
        rows.extend(check(cfg))
    return rows


def rows_to_table(rows: list[CheckRow]) -> CsvTable:
    table = CsvTable(
        header=[
            "check",
            "n_sites",
            "gamma (dimensionless)",
            "h (units |J|)",
            "analytic",
            "oracle",
            "abs_diff",
            "tolerance",
            "passed",
        ]
    )
    for r in rows:
        table.append(
            (r.check, r.n_sites, r.gamma, r.h, r.analytic, r.oracle,
             r.abs_diff, r.tolerance, r.passed)
        )
    return table


def summarize(rows: list[CheckRow]) -> list[tuple[str, int, int]]:
    """Per-check (name, passed, total) in first-seen order."""
    order: list[str] = []
    passed: dict[str, int] = {}
    total: dict[str, int] = {}
    for r in rows:
        if r.check not in total:
            order.append(r.check)
            passed[r.check] = 0
            total[r.check] = 0
        total[r.check] += 1
        passed[r.check] += int(r.passed)
    return [(name, passed[name], total[name]) for name in order]
