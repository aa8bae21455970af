"""Acceptance suite: one test per release criterion, at its stated tolerance.

Each test prints a single ``ACCEPTANCE nn PASS/FAIL`` line (visible with
``pytest -s``) and asserts both the numerical criterion and its runtime
budget.
"""

import csv
import time

import numpy as np
import pytest

from catchain import exact_diag as ed
from catchain import validation, xxx_chain, xy_chain, xy_states
from catchain.cli import main
from catchain.params import Parity, xy_params, xxx_params

SEED = 20260808


def report(index: int, ok: bool, detail: str, elapsed: float, budget: float):
    status = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {index:02d} {status}: {detail} [{elapsed:.2f}s / {budget:.0f}s]")
    assert ok, f"criterion {index} failed: {detail}"
    assert elapsed < budget, f"criterion {index} exceeded {budget}s ({elapsed:.1f}s)"


def test_criterion_01_factorizing_field_degeneracy():
    t0 = time.time()
    worst = 0.0
    for n in (4, 6, 8, 10, 12):
        for gamma in (0.3, 0.6, 0.9):
            p = xy_params(n, gamma, xy_chain.factorizing_field(gamma))
            gap = abs(
                xy_chain.sector_spectrum(p, Parity.EVEN).lowest_physical_energy
                - xy_chain.sector_spectrum(p, Parity.ODD).lowest_physical_energy
            )
            worst = max(worst, gap)
    elapsed = time.time() - t0
    report(1, worst < 1e-10, f"max parity gap at h_F = {worst:.2e} < 1e-10",
           elapsed, 5.0)


def test_criterion_02_crossing_scan_reference():
    t0 = time.time()
    crossings = xy_chain.find_crossings(xy_params(8, 0.6, 0.0)).crossings
    elapsed = time.time() - t0
    ok = len(crossings) == 4 and abs(crossings[-1] - 0.8) < 1e-6
    report(2, ok,
           f"{len(crossings)} crossings, last = {crossings[-1]:.8f} (0.8 ± 1e-6)",
           elapsed, 10.0)


def test_criterion_03_free_fermion_vs_dense_oracle():
    t0 = time.time()
    rng = np.random.default_rng(SEED)
    worst = 0.0
    for n in (4, 6, 8, 10, 12):
        for _ in range(20):
            p = xy_params(n, float(rng.uniform(0.05, 1.0)),
                          float(rng.uniform(0.0, 2.0)))
            ff = (
                xy_chain.sector_spectrum(p, Parity.EVEN).lowest_physical_energy,
                xy_chain.sector_spectrum(p, Parity.ODD).lowest_physical_energy,
            )
            oracle = ed.sector_minima(p)
            worst = max(
                worst,
                abs(ff[0] - oracle[0]) / abs(oracle[0]),
                abs(ff[1] - oracle[1]) / abs(oracle[1]),
            )
    elapsed = time.time() - t0
    report(3, worst < 1e-9,
           f"100 random points, worst relative sector-minimum error = {worst:.2e}",
           elapsed, 120.0)


def test_criterion_04_xy_concurrence_decay():
    t0 = time.time()
    gamma = 0.6
    sizes = np.arange(10, 42, 2)
    values = np.array(
        [xy_states.concurrence_symmetric(gamma, int(n), +1).closed_form
         for n in sizes]
    )
    slope = float(np.polyfit(sizes, np.log(values), 1)[0])
    base = xy_states.concurrence_symmetric(gamma, 10, +1).decay_base
    expected_base = np.sqrt((1 - gamma) / (1 + gamma))
    elapsed = time.time() - t0
    ok = abs(slope / np.log(0.5) - 1) < 0.05 and abs(base - expected_base) < 1e-15
    report(4, ok,
           f"log-slope {slope:.5f} vs ln(1/2) = {np.log(0.5):.5f}, "
           f"decay base {base:.3f}",
           elapsed, 5.0)


def test_criterion_05_concurrence_convention_ratio():
    t0 = time.time()
    gamma = 0.6
    hf = xy_chain.factorizing_field(gamma)
    ratios = []
    for n in (4, 6, 8, 10):
        alpha = xy_states.factorization_data(gamma, n).alpha
        plus = ed.build_product_state([(alpha, 0.0)] * n)
        minus = ed.build_product_state([(-alpha, 0.0)] * n)
        cat = ed.symmetrize_state([plus, minus], [1.0, 1.0])
        wootters = ed.wootters_concurrence(ed.reduce_two_spin(cat, 0, 1))
        ratios.append(wootters / xy_states.concurrence_symmetric(gamma, n, +1).c_simplified)
    spread = (max(ratios) - min(ratios)) / abs(ratios[0])
    elapsed = time.time() - t0
    report(
        5, spread < 1e-6,
        f"Wootters / simplified-form ratio = {ratios[0]:.9f} at h_F = {hf}, "
        f"relative spread {spread:.2e} over N in (4..10)",
        elapsed, 60.0,
    )


def test_criterion_06_xxx_concurrence_exact_and_asymptote():
    t0 = time.time()
    worst = 0.0
    for n in range(4, 42, 2):
        c = xxx_chain.xxx_concurrence(n)
        worst = max(worst, abs(c.c_simplified - 1.0 / (2.0 * (n - 1))))
    exact_200 = xxx_chain.xxx_concurrence(200).c_simplified
    asym_err = abs(xxx_chain.xxx_concurrence_asymptotic(200) / exact_200 - 1.0)
    elapsed = time.time() - t0
    ok = worst < 1e-12 and asym_err < 0.01
    report(6, ok,
           f"max |C - 1/(2(N-1))| = {worst:.2e}, asymptote error at N=200 = "
           f"{asym_err:.3%}",
           elapsed, 5.0)


def test_criterion_07_xxx_manifold_ground_truth():
    t0 = time.time()
    ok = True
    worst_residual = 0.0
    for n in (4, 6, 8):
        H = ed.build_hamiltonian(xxx_params(n))
        e0, degeneracy = ed.ground_state_degeneracy(H)
        ok = ok and abs(e0 + n) < 1e-10 and degeneracy == n + 1
        for theta in np.linspace(0.0, np.pi, 7):
            psi = ed.build_product_state([(float(theta), 0.0)] * n).amplitudes
            worst_residual = max(
                worst_residual, float(np.linalg.norm(H @ psi - (-n) * psi))
            )
    elapsed = time.time() - t0
    ok = ok and worst_residual < 1e-10
    report(7, ok,
           f"E0 = -N with degeneracy N+1 for N in (4,6,8); worst member "
           f"residual = {worst_residual:.2e}",
           elapsed, 30.0)


def test_criterion_08_interference_deficit_scaling():
    t0 = time.time()
    lam = np.array([1.0])
    gamma = 0.6
    c4 = xy_states.cos_2alpha(gamma) ** 4
    deltas = {
        n: abs(xy_states.genfun_symmetric(gamma, n, +1, lam)[1].values[0])
        for n in (8, 12, 16, 20)
    }
    xy_ok = all(
        abs(deltas[n + 4] / deltas[n] / c4 - 1.0) < 0.10 for n in (8, 12, 16)
    )
    results = {n: xxx_chain.xxx_genfun_symmetric(n, lam) for n in (200, 400)}
    scaled = {n: n * abs(r.delta.values[0]) for n, r in results.items()}
    xxx_ok = abs(scaled[400] / scaled[200] - 1.0) < 0.05
    sd_ok = all(
        abs(abs(r.delta_steepest.values[0]) / abs(r.delta.values[0]) - 1.0) < 0.05
        for r in results.values()
    )
    elapsed = time.time() - t0
    report(8, xy_ok and xxx_ok and sd_ok,
           f"XY ratio -> cos^4(2a) within 10%; N|dG| 200 vs 400 within "
           f"{abs(scaled[400] / scaled[200] - 1):.2%}; steepest-descent match "
           "within 5%",
           elapsed, 60.0)


def test_criterion_09_concurrence_size_table(tmp_path):
    t0 = time.time()
    out = tmp_path / "fig2.csv"
    code = main(["fig2", "--out", str(out), "--no-plot"])
    with open(out, newline="") as fh:
        reader = csv.reader(fh)
        next(reader)
        rows = list(reader)
    xy_05 = np.array([float(r[1]) for r in rows])
    xy_08 = np.array([float(r[2]) for r in rows])
    xxx = np.array([float(r[3]) for r in rows])
    ok = (
        code == 0
        and bool(np.all(xy_08 < xy_05))          # stronger anisotropy decays faster
        and xy_05[0] > xxx[0]                    # starts above the 1/N curve
        and xy_05[-1] < xxx[-1]                  # ends below it
        and xy_08[-1] < xxx[-1]
    )
    elapsed = time.time() - t0
    report(9, ok,
           "XY curves cross below the isotropic 1/(2(N-1)) curve; "
           "gamma=0.8 below gamma=0.5 at every N",
           elapsed, 10.0)


def test_criterion_10_full_validation_suite(tmp_path):
    t0 = time.time()
    code = main(["oracle-validate", "--out", str(tmp_path / "validate.csv")])
    elapsed = time.time() - t0
    report(10, code == 0, f"oracle-validate exit code {code}", elapsed, 300.0)
