"""Command line interface.

Subcommands::

    fig1             parity-gap field sweep with level crossings (CSV + PNG)
    fig2             concurrence vs chain length, both models (CSV + PNG)
    genfun           generating function of a named state (CSV + PNG)
    xy-crossings     level-crossing fields of the anisotropic chain (CSV)
    xy-concurrence   cat-state concurrence closed forms vs N (CSV)
    xxx-concurrence  isotropic symmetric-state concurrence vs N (CSV)
    oracle-validate  run every closed-form-vs-dense-oracle check (CSV)

Every command accepts ``--config FILE`` (flat ``key = value`` lines, ``#``
comments); explicit flags override file values.  Exit codes: 0 success,
1 computation failure (including failed validation checks), 2 invalid
configuration.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import plots, validation, xxx_chain, xy_chain, xy_states
from .config import ConfigError, Settings, read_config_file
from .params import Parity, xy_params
from .tables import CsvTable

_GENFUN_STATES = (
    "xy-symmetric-plus",
    "xy-symmetric-minus",
    "xy-factorized-plus",
    "xy-factorized-minus",
    "xy-cross",
    "xxx-member",
    "xxx-symmetric",
)


def _settings(args: argparse.Namespace, defaults: dict, flag_keys: dict) -> Settings:
    file_values = read_config_file(args.config) if args.config else {}
    flags = {key: getattr(args, attr) for key, attr in flag_keys.items()}
    if getattr(args, "no_plot", False):
        flags["plot"] = "false"
    return Settings(defaults, file_values, flags)


def _branch(settings: Settings) -> int:
    return +1 if settings.get_choice("branch", ("plus", "minus")) == "plus" else -1


def _field_grid(settings: Settings) -> np.ndarray:
    h_min = settings.get_float("h_min", minimum=0.0)
    h_max = settings.get_float("h_max")
    h_step = settings.get_float("h_step", minimum=0.0, exclusive_min=True)
    if h_max <= h_min:
        raise ConfigError(f"h_max must exceed h_min, got [{h_min}, {h_max}]")
    n_points = int(round((h_max - h_min) / h_step)) + 1
    if n_points < 2:
        raise ConfigError("field grid needs at least two points")
    return np.linspace(h_min, h_max, n_points)


# --------------------------------------------------------------------------
# fig1
# --------------------------------------------------------------------------

_FIG1_DEFAULTS = {
    "n": 8,
    "gamma": 0.6,
    "h_min": 0.0,
    "h_max": 1.05,
    "h_step": 0.005,
    "crossing_step": xy_chain.DEFAULT_CROSSING_STEP,
    "crossing_tol": xy_chain.DEFAULT_CROSSING_TOL,
    "out": "fig1.csv",
    "plot": True,
}


def cmd_fig1(args: argparse.Namespace) -> int:
    s = _settings(
        args,
        _FIG1_DEFAULTS,
        {"n": "n", "gamma": "gamma", "h_min": "h_min", "h_max": "h_max",
         "h_step": "h_step", "out": "out"},
    )
    n = s.get_int("n", minimum=4)
    gamma = s.get_float("gamma", minimum=0.0, maximum=1.0, exclusive_min=True)
    grid = _field_grid(s)
    step = s.get_float("crossing_step", minimum=0.0, exclusive_min=True)
    tol = s.get_float("crossing_tol", minimum=0.0, exclusive_min=True)
    plot = s.get_bool("plot")
    out = s.raw("out")

    e_even, e_odd = xy_chain.sector_energy_curves(n, gamma, grid)
    table = CsvTable(
        header=[
            "h (units |J|)",
            "e_odd_min (units |J|)",
            "e_even_min (units |J|)",
            "gap_odd_minus_even (units |J|)",
        ]
    )
    for h, ee, eo in zip(grid, e_even, e_odd):
        table.append((float(h), float(eo), float(ee), float(eo - ee)))
    path = table.write(out)
    print(f"wrote {path} ({len(table.rows)} rows)")

    crossings = xy_chain.find_crossings(xy_params(n, gamma, 0.0), step, tol).crossings
    companion = CsvTable(header=["crossing_index", "h_crossing (units |J|)"])
    for i, h in enumerate(crossings):
        companion.append((i, float(h)))
    companion_path = companion.write(path.with_name(path.stem + "_crossings.csv"))
    print(
        f"wrote {companion_path} ({len(crossings)} crossings, "
        f"last = {crossings[-1]:.8f})"
    )
    if plot:
        png = plots.render_gap_scan(
            grid, e_odd, e_even, crossings, n, gamma, plots.figure_path(path)
        )
        print(f"wrote {png}")
    return 0


# --------------------------------------------------------------------------
# fig2
# --------------------------------------------------------------------------

_FIG2_DEFAULTS = {
    "n_min": 4,
    "n_max": 40,
    "gamma_a": 0.5,
    "gamma_b": 0.8,
    "branch": "plus",
    "out": "fig2.csv",
    "plot": True,
}


def cmd_fig2(args: argparse.Namespace) -> int:
    s = _settings(
        args, _FIG2_DEFAULTS,
        {"n_min": "n_min", "n_max": "n_max", "branch": "branch", "out": "out"},
    )
    n_min = s.get_int("n_min", minimum=4)
    n_max = s.get_int("n_max", minimum=4)
    if n_min % 2 or n_max % 2 or n_max < n_min:
        raise ConfigError("n_min and n_max must be even with n_max >= n_min")
    gamma_a = s.get_float("gamma_a", minimum=0.0, maximum=1.0, exclusive_min=True)
    gamma_b = s.get_float("gamma_b", minimum=0.0, maximum=1.0, exclusive_min=True)
    branch = _branch(s)
    plot = s.get_bool("plot")

    sizes = np.arange(n_min, n_max + 1, 2)
    curve_a = np.array(
        [xy_states.concurrence_symmetric(gamma_a, int(n), branch).closed_form
         for n in sizes]
    )
    curve_b = np.array(
        [xy_states.concurrence_symmetric(gamma_b, int(n), branch).closed_form
         for n in sizes]
    )
    xxx_exact = np.array(
        [xxx_chain.xxx_concurrence(int(n)).c_simplified for n in sizes]
    )
    xxx_asym = np.array(
        [xxx_chain.xxx_concurrence_asymptotic(int(n)) for n in sizes]
    )
    table = CsvTable(
        header=[
            "n_sites",
            f"c_xy_gamma_{gamma_a:g} (dimensionless)",
            f"c_xy_gamma_{gamma_b:g} (dimensionless)",
            "c_xxx_exact (dimensionless)",
            "c_xxx_asymptotic (dimensionless)",
        ]
    )
    for i, n in enumerate(sizes):
        table.append(
            (int(n), float(curve_a[i]), float(curve_b[i]),
             float(xxx_exact[i]), float(xxx_asym[i]))
        )
    path = table.write(s.raw("out"))
    print(f"wrote {path} ({len(table.rows)} rows)")
    if plot:
        png = plots.render_concurrence_vs_size(
            sizes,
            {
                rf"anisotropic, $\gamma={gamma_a:g}$": curve_a,
                rf"anisotropic, $\gamma={gamma_b:g}$": curve_b,
            },
            xxx_exact,
            xxx_asym,
            plots.figure_path(path),
        )
        print(f"wrote {png}")
    return 0


# --------------------------------------------------------------------------
# genfun
# --------------------------------------------------------------------------

_GENFUN_DEFAULTS = {
    "state": "xy-symmetric-plus",
    "n": 8,
    "gamma": 0.6,
    "theta": 0.5,
    "lambda_max": 10.0,
    "lambda_points": 201,
    "lambda_star": 1.0,
    "scaling_sizes": "auto",
    "out": "genfun.csv",
    "plot": True,
}


def _genfun_series(state: str, n: int, gamma: float, theta: float, lam: np.ndarray):
    """(values, delta) for one named state; delta is zero for single branches."""
    zero = np.zeros_like(lam, dtype=complex)
    if state == "xy-symmetric-plus":
        g, d = xy_states.genfun_symmetric(gamma, n, +1, lam)
        return g.values, d.values
    if state == "xy-symmetric-minus":
        g, d = xy_states.genfun_symmetric(gamma, n, -1, lam)
        return g.values, d.values
    if state == "xy-factorized-plus":
        return xy_states.genfun_factorized(gamma, n, +1, lam).values, zero
    if state == "xy-factorized-minus":
        return xy_states.genfun_factorized(gamma, n, -1, lam).values, zero
    if state == "xy-cross":
        return xy_states.genfun_cross(gamma, n, lam).values, zero
    if state == "xxx-member":
        return xxx_chain.xxx_genfun_member(theta, n, lam).values, zero
    result = xxx_chain.xxx_genfun_symmetric(n, lam)
    return result.genfun.values, result.delta.values


def cmd_genfun(args: argparse.Namespace) -> int:
    s = _settings(
        args, _GENFUN_DEFAULTS,
        {"state": "state", "n": "n", "gamma": "gamma", "theta": "theta",
         "lambda_max": "lambda_max", "lambda_points": "lambda_points",
         "lambda_star": "lambda_star", "out": "out"},
    )
    state = s.get_choice("state", _GENFUN_STATES)
    n = s.get_int("n", minimum=4)
    gamma = s.get_float("gamma", minimum=0.0, maximum=1.0, exclusive_min=True)
    theta = s.get_float("theta")
    lambda_max = s.get_float("lambda_max", minimum=0.0, exclusive_min=True)
    lambda_points = s.get_int("lambda_points", minimum=2)
    lambda_star = s.get_float("lambda_star")
    plot = s.get_bool("plot")
    if state == "xxx-symmetric" and n % 2:
        raise ConfigError("xxx-symmetric needs even n")
    scaling_key = s.raw("scaling_sizes")
    is_cat = state in ("xy-symmetric-plus", "xy-symmetric-minus", "xxx-symmetric")
    if scaling_key == "auto":
        scaling_sizes = (
            [100, 150, 200, 250, 300, 350, 400]
            if state == "xxx-symmetric"
            else [8, 12, 16, 20, 24, 28, 32]
        )
    else:
        scaling_sizes = s.get_int_list("scaling_sizes", minimum=4)
    if state == "xxx-symmetric" and any(m % 2 for m in scaling_sizes):
        raise ConfigError("scaling_sizes must be even for xxx-symmetric")

    lam = xy_states.default_lambda_grid(lambda_max, lambda_points)
    values, delta = _genfun_series(state, n, gamma, theta, lam)
    table = CsvTable(
        header=[
            "lambda (dimensionless)",
            "re_g (dimensionless)",
            "im_g (dimensionless)",
            "re_delta_g (dimensionless)",
            "im_delta_g (dimensionless)",
        ]
    )
    for i, l in enumerate(lam):
        table.append(
            (float(l), float(values[i].real), float(values[i].imag),
             float(delta[i].real), float(delta[i].imag))
        )
    path = table.write(s.raw("out"))
    print(f"wrote {path} ({len(table.rows)} rows)")

    scaling = None
    if is_cat:
        star = np.array([lambda_star])
        delta_abs = np.array(
            [abs(_genfun_series(state, int(m), gamma, theta, star)[1][0])
             for m in scaling_sizes]
        )
        companion = CsvTable(
            header=[
                "n_sites",
                f"abs_delta_g_at_lambda_{lambda_star:g} (dimensionless)",
                "n_times_abs_delta_g (dimensionless)",
            ]
        )
        for m, d in zip(scaling_sizes, delta_abs):
            companion.append((int(m), float(d), float(m * d)))
        companion_path = companion.write(path.with_name(path.stem + "_scaling.csv"))
        print(f"wrote {companion_path} ({len(scaling_sizes)} rows)")
        scaling = (np.asarray(scaling_sizes), delta_abs)

    if plot:
        png = plots.render_genfun(
            lam, values, delta, state, plots.figure_path(path), scaling
        )
        print(f"wrote {png}")
    return 0


# --------------------------------------------------------------------------
# xy-crossings / xy-concurrence / xxx-concurrence
# --------------------------------------------------------------------------

_XY_CROSSINGS_DEFAULTS = {
    "n": 8,
    "gamma": 0.6,
    "h_step": xy_chain.DEFAULT_CROSSING_STEP,
    "tol": xy_chain.DEFAULT_CROSSING_TOL,
    "out": "xy_crossings.csv",
}


def cmd_xy_crossings(args: argparse.Namespace) -> int:
    s = _settings(
        args, _XY_CROSSINGS_DEFAULTS,
        {"n": "n", "gamma": "gamma", "h_step": "h_step", "out": "out"},
    )
    n = s.get_int("n", minimum=4)
    gamma = s.get_float("gamma", minimum=0.0, maximum=1.0, exclusive_min=True)
    step = s.get_float("h_step", minimum=0.0, exclusive_min=True)
    tol = s.get_float("tol", minimum=0.0, exclusive_min=True)
    cs = xy_chain.find_crossings(xy_params(n, gamma, 0.0), step, tol)
    table = CsvTable(header=["crossing_index", "h_crossing (units |J|)"])
    for i, h in enumerate(cs.crossings):
        table.append((i, float(h)))
    path = table.write(s.raw("out"))
    print(
        f"wrote {path} ({len(cs.crossings)} crossings, last = "
        f"{cs.crossings[-1]:.8f}, h_F = {xy_chain.factorizing_field(gamma):.8f})"
    )
    return 0


_XY_CONCURRENCE_DEFAULTS = {
    "gamma": 0.6,
    "n_min": 4,
    "n_max": 40,
    "branch": "plus",
    "out": "xy_concurrence.csv",
}


def cmd_xy_concurrence(args: argparse.Namespace) -> int:
    s = _settings(
        args, _XY_CONCURRENCE_DEFAULTS,
        {"gamma": "gamma", "n_min": "n_min", "n_max": "n_max",
         "branch": "branch", "out": "out"},
    )
    gamma = s.get_float("gamma", minimum=0.0, maximum=1.0, exclusive_min=True)
    n_min = s.get_int("n_min", minimum=4)
    n_max = s.get_int("n_max", minimum=4)
    if n_max < n_min:
        raise ConfigError("n_max must be >= n_min")
    branch = _branch(s)
    table = CsvTable(
        header=[
            "n_sites",
            "closed_form (dimensionless)",
            "c_simplified (dimensionless)",
            "p_offdiag (dimensionless)",
            "p_iii (dimensionless)",
            "decay_base (dimensionless)",
        ]
    )
    for n in range(n_min, n_max + 1):
        c = xy_states.concurrence_symmetric(gamma, n, branch)
        table.append(
            (n, c.closed_form, c.c_simplified, c.p_offdiag, c.p_iii, c.decay_base)
        )
    path = table.write(s.raw("out"))
    print(f"wrote {path} ({len(table.rows)} rows)")
    return 0


_XXX_CONCURRENCE_DEFAULTS = {
    "n_min": 4,
    "n_max": 40,
    "out": "xxx_concurrence.csv",
}


def cmd_xxx_concurrence(args: argparse.Namespace) -> int:
    s = _settings(
        args, _XXX_CONCURRENCE_DEFAULTS,
        {"n_min": "n_min", "n_max": "n_max", "out": "out"},
    )
    n_min = s.get_int("n_min", minimum=4)
    n_max = s.get_int("n_max", minimum=4)
    if n_min % 2 or n_max % 2 or n_max < n_min:
        raise ConfigError("n_min and n_max must be even with n_max >= n_min")
    table = CsvTable(
        header=[
            "n_sites",
            "c_quadrature (dimensionless)",
            "c_closed_form (dimensionless)",
            "c_asymptotic (dimensionless)",
            "p_offdiag (dimensionless)",
            "p_iii (dimensionless)",
        ]
    )
    for n in range(n_min, n_max + 1, 2):
        c = xxx_chain.xxx_concurrence(n)
        table.append(
            (n, c.c_simplified, c.closed_form,
             xxx_chain.xxx_concurrence_asymptotic(n), c.p_offdiag, c.p_iii)
        )
    path = table.write(s.raw("out"))
    print(f"wrote {path} ({len(table.rows)} rows)")
    return 0


# --------------------------------------------------------------------------
# oracle-validate
# --------------------------------------------------------------------------

_VALIDATE_DEFAULTS = {
    "oracle_cap": 14,
    "ed_sizes": "4,6,8,10,12",
    "n_random_points": 20,
    "seed": 20260808,
    "out": "oracle_validate.csv",
}


def cmd_oracle_validate(args: argparse.Namespace) -> int:
    s = _settings(
        args, _VALIDATE_DEFAULTS,
        {"oracle_cap": "oracle_cap", "ed_sizes": "ed_sizes",
         "n_random_points": "n_random_points", "seed": "seed", "out": "out"},
    )
    cap = s.get_int("oracle_cap", minimum=4)
    sizes = s.get_int_list("ed_sizes", minimum=4)
    over = [n for n in sizes if n > cap]
    if over:
        raise ConfigError(
            f"requested dense sizes {over} exceed the oracle cap {cap}"
        )
    cfg = validation.ValidationConfig(
        oracle_cap=cap,
        ed_sizes=tuple(sizes),
        n_random_points=s.get_int("n_random_points", minimum=1),
        seed=s.get_int("seed"),
    )
    rows = validation.run_validation(cfg)
    path = validation.rows_to_table(rows).write(s.raw("out"))
    failures = 0
    for name, passed, total in validation.summarize(rows):
        status = "PASS" if passed == total else "FAIL"
        failures += total - passed
        print(f"[{status}] {name}: {passed}/{total}")
    print(f"wrote {path} ({len(rows)} rows)")
    if failures:
        print(f"{failures} check rows failed", file=sys.stderr)
        return 1
    return 0


# --------------------------------------------------------------------------
# parser
# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catchain",
        description=(
            "Finite spin chains with degenerate ground states: exact spectra, "
            "cat-state concurrence, and order-parameter generating functions."
        ),
    )
    sub = parser.add_subparsers(dest="command")

    def add(name: str, runner, help_text: str, plotting: bool = False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", help="flat key = value config file")
        p.add_argument("--out", help="output CSV path")
        if plotting:
            p.add_argument(
                "--no-plot", action="store_true",
                help="skip the PNG rendered next to the CSV",
            )
        p.set_defaults(runner=runner)
        return p

    p = add("fig1", cmd_fig1, "parity-gap field sweep with level crossings",
            plotting=True)
    p.add_argument("--n", type=int)
    p.add_argument("--gamma", type=float)
    p.add_argument("--h-min", dest="h_min", type=float)
    p.add_argument("--h-max", dest="h_max", type=float)
    p.add_argument("--h-step", dest="h_step", type=float)

    p = add("fig2", cmd_fig2, "concurrence vs chain length for both models",
            plotting=True)
    p.add_argument("--n-min", dest="n_min", type=int)
    p.add_argument("--n-max", dest="n_max", type=int)
    p.add_argument("--branch", choices=("plus", "minus"))

    p = add("genfun", cmd_genfun, "generating function of a named state",
            plotting=True)
    p.add_argument("--state", choices=_GENFUN_STATES)
    p.add_argument("--n", type=int)
    p.add_argument("--gamma", type=float)
    p.add_argument("--theta", type=float)
    p.add_argument("--lambda-max", dest="lambda_max", type=float)
    p.add_argument("--lambda-points", dest="lambda_points", type=int)
    p.add_argument("--lambda-star", dest="lambda_star", type=float)

    p = add("xy-crossings", cmd_xy_crossings, "level-crossing fields")
    p.add_argument("--n", type=int)
    p.add_argument("--gamma", type=float)
    p.add_argument("--h-step", dest="h_step", type=float)

    p = add("xy-concurrence", cmd_xy_concurrence, "cat-state concurrence vs N")
    p.add_argument("--gamma", type=float)
    p.add_argument("--n-min", dest="n_min", type=int)
    p.add_argument("--n-max", dest="n_max", type=int)
    p.add_argument("--branch", choices=("plus", "minus"))

    p = add("xxx-concurrence", cmd_xxx_concurrence,
            "isotropic symmetric-state concurrence vs N")
    p.add_argument("--n-min", dest="n_min", type=int)
    p.add_argument("--n-max", dest="n_max", type=int)

    p = add("oracle-validate", cmd_oracle_validate,
            "closed forms vs dense diagonalization")
    p.add_argument("--oracle-cap", dest="oracle_cap", type=int)
    p.add_argument("--ed-sizes", dest="ed_sizes")
    p.add_argument("--n-random-points", dest="n_random_points", type=int)
    p.add_argument("--seed", type=int)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "runner", None) is None:
        parser.print_help()
        return 2
    try:
        return args.runner(args)
    except ConfigError as exc:
        print(f"error: invalid configuration: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # computation failure: exit contract is 1
        print(f"error: computation failed: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
