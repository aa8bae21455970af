"""Uniform periodic quadrature on [0, 2pi) and the Gaussian-ratio asymptote.

The trapezoid rule on a uniform periodic grid integrates every trigonometric
monomial exp(i m theta) with |m| < n_nodes exactly, which is why the angular
integrals elsewhere in the package (all trigonometric polynomials of bounded
degree) can be held to 1e-12-class tolerances.  Summation order is fixed by
node index, so results are bitwise reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

Complex1D = Callable[[np.ndarray], np.ndarray]
Complex2D = Callable[[np.ndarray, np.ndarray], np.ndarray]


@dataclass(frozen=True)
class PeriodicGrid:
    """Uniform nodes theta_j = 2 pi j / n_nodes with common weight 2 pi / n_nodes."""

    n_nodes: int
    nodes: np.ndarray = field(repr=False)
    weight: float

    def __post_init__(self) -> None:
        if self.n_nodes < 2:
            raise ValueError(f"need at least 2 nodes, got {self.n_nodes}")


def periodic_grid(n_nodes: int) -> PeriodicGrid:
    """Build the uniform periodic grid with ``n_nodes`` points on [0, 2pi)."""
    if n_nodes < 2:
        raise ValueError(f"need at least 2 nodes, got {n_nodes}")
    nodes = 2.0 * np.pi * np.arange(n_nodes) / n_nodes
    return PeriodicGrid(n_nodes=n_nodes, nodes=nodes, weight=2.0 * np.pi / n_nodes)


def integrate_periodic_1d(f: Complex1D, grid: PeriodicGrid) -> complex:
    """Trapezoid integral of ``f`` over [0, 2pi).

    ``f`` must accept the node array and evaluate elementwise (numpy ufunc
    style).  Exact for trigonometric polynomials of degree < ``grid.n_nodes``.
    """
    values = np.asarray(f(grid.nodes))
    return complex(grid.weight * values.sum())


def integrate_periodic_2d(f: Complex2D, grid: PeriodicGrid) -> complex:
    """Tensor-product trapezoid integral of ``f(theta, theta')`` over [0, 2pi)^2.

    Same exactness class as the 1d rule in each variable separately.
    """
    theta, theta_p = np.meshgrid(grid.nodes, grid.nodes, indexing="ij")
    values = np.asarray(f(theta, theta_p))
    return complex(grid.weight ** 2 * values.sum())


def gaussian_ratio_asymptote(n_sites: int) -> float:
    """Ratio of the two Gaussian integrals int x^2 e^{-N x^2/2} / (2 int e^{-N x^2/2}).

    Closed form 1/(2N); the steepest-descent limit of the symmetric-state
    concurrence of the isotropic chain.
    """
    if n_sites < 1:
        raise ValueError("n_sites must be positive")
    return 1.0 / (2.0 * n_sites)
