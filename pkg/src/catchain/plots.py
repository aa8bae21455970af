"""Figure rendering for the CLI report commands.

Each report command writes its CSV first (the artifact of record) and then,
unless told otherwise, renders a matplotlib PNG next to it.  Figures are for
eyeballing; only the CSV output is byte-deterministic.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np


def figure_path(csv_path: str | Path) -> Path:
    return Path(csv_path).with_suffix(".png")


def render_gap_scan(
    h: np.ndarray,
    e_odd: np.ndarray,
    e_even: np.ndarray,
    crossings: np.ndarray,
    n_sites: int,
    gamma: float,
    path: str | Path,
) -> Path:
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.plot(h, e_odd - e_even, color="tab:blue", lw=1.5,
            label=r"$E_{\mathrm{odd}} - E_{\mathrm{even}}$")
    ax.axhline(0.0, color="0.6", lw=0.8)
    for i, hc in enumerate(crossings):
        ax.axvline(hc, color="tab:red", ls="--", lw=0.8,
                   label="level crossings" if i == 0 else None)
    ax.set_xlabel(r"transverse field $h$  (units of $|J|$)")
    ax.set_ylabel(r"parity gap  (units of $|J|$)")
    ax.set_title(rf"$N={n_sites}$, $\gamma={gamma:g}$")
    ax.legend(loc="best", fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return Path(path)


def render_concurrence_vs_size(
    n_values: np.ndarray,
    xy_curves: dict[str, np.ndarray],
    xxx_exact: np.ndarray,
    xxx_asymptotic: np.ndarray,
    path: str | Path,
) -> Path:
    fig, ax = plt.subplots(figsize=(7, 4))
    for label, curve in xy_curves.items():
        ax.semilogy(n_values, curve, lw=1.5, label=label)
    ax.semilogy(n_values, xxx_exact, "o", ms=4, color="k",
                label=r"isotropic, $1/(2(N-1))$")
    ax.semilogy(n_values, xxx_asymptotic, ":", color="0.5", label=r"$1/(2N)$")
    ax.set_xlabel(r"chain length $N$")
    ax.set_ylabel(r"two-spin concurrence $\mathcal{C}$")
    ax.legend(loc="best", fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return Path(path)


def render_genfun(
    lam: np.ndarray,
    values: np.ndarray,
    delta: np.ndarray,
    label: str,
    path: str | Path,
    scaling: tuple[np.ndarray, np.ndarray] | None = None,
) -> Path:
    n_panels = 3 if scaling is not None else 2
    fig, axes = plt.subplots(1, n_panels, figsize=(4 * n_panels, 3.4))
    axes[0].plot(lam, values.real, lw=1.2, label=r"Re $G$")
    axes[0].plot(lam, values.imag, lw=1.2, label=r"Im $G$")
    axes[0].set_xlabel(r"$\lambda$")
    axes[0].set_ylabel(r"$G(\lambda)$")
    axes[0].set_title(label, fontsize=10)
    axes[0].legend(fontsize=8)
    axes[1].plot(lam, np.abs(delta), color="tab:red", lw=1.2)
    axes[1].set_xlabel(r"$\lambda$")
    axes[1].set_ylabel(r"$|\Delta G(\lambda)|$")
    if scaling is not None:
        n_values, delta_abs = scaling
        axes[2].semilogy(n_values, delta_abs, "o-", ms=4, lw=1.0)
        axes[2].set_xlabel(r"$N$")
        axes[2].set_ylabel(r"$|\Delta G(\lambda_*)|$")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return Path(path)
