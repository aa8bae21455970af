"""Factorized-state algebra of the XY chain at its factorizing field.

At h_F = sqrt(1 - gamma^2) the two degenerate ground states are products of
identical single-spin states tilted by +-alpha from the z axis, with
cos(2 alpha) = sqrt((1-gamma)/(1+gamma)).  This module carries the closed
forms built on them: the expansion coefficients u+- of the product states in
the parity eigenbasis, the two-spin concurrence of the parity (cat)
eigenstates, and the order-parameter generating functions with their
interference deficit Delta G.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .results import ConcurrenceBreakdown, GenFunSeries, StateLabel


def _check_gamma(gamma: float) -> None:
    if not 0.0 < gamma <= 1.0:
        raise ValueError(f"need 0 < gamma <= 1, got {gamma!r}")


def _check_branch(branch: int) -> int:
    if branch not in (+1, -1):
        raise ValueError(f"branch must be +1 or -1, got {branch!r}")
    return branch


def cos_2alpha(gamma: float) -> float:
    """Tilt-angle cosine c = cos(2 alpha) = sqrt((1-gamma)/(1+gamma))."""
    _check_gamma(gamma)
    return float(np.sqrt((1.0 - gamma) / (1.0 + gamma)))


@dataclass(frozen=True)
class FactorizationData:
    """Factorized-state geometry at the factorizing field.

    ``overlap = c^N`` is the inner product of the two product ground states;
    ``u_plus/u_minus`` expand each product state over the orthonormal parity
    eigenstates, u+- = sqrt((1 +- c^N)/2), so that u+^2 + u-^2 = 1 and
    u+^2 - u-^2 reproduces the overlap.
    """

    gamma: float
    n_sites: int
    alpha: float
    c: float
    overlap: float
    u_plus: float
    u_minus: float


def factorization_data(gamma: float, n_sites: int) -> FactorizationData:
    """Superposition data of the factorized states for gamma and chain size N."""
    _check_gamma(gamma)
    if n_sites < 1:
        raise ValueError("n_sites must be positive")
    c = cos_2alpha(gamma)
    overlap = c ** n_sites
    return FactorizationData(
        gamma=gamma,
        n_sites=n_sites,
        alpha=float(0.5 * np.arccos(c)),
        c=c,
        overlap=overlap,
        u_plus=float(np.sqrt((1.0 + overlap) / 2.0)),
        u_minus=float(np.sqrt((1.0 - overlap) / 2.0)),
    )


def concurrence_symmetric(
    gamma: float, n_sites: int, branch: int = +1
) -> ConcurrenceBreakdown:
    """Two-spin concurrence of the symmetric (cat) state on one parity branch.

    ``closed_form`` is c^{N-2} sin^2(2 alpha) / (1 +- c^N); it is independent
    of the spin separation and decays with base c = sqrt((1-gamma)/(1+gamma))
    per added site (``decay_base``).  The p-term decomposition and the
    simplified-form value c_simplified = p_offdiag/2 - p_iii are returned alongside
    (c_simplified is closed_form/2 on the even branch and -closed_form/2 on the odd
    branch, where the two-spin entanglement is of antiferromagnetic type).
    """
    _check_branch(branch)
    if gamma == 0.0:
        raise ValueError(
            "gamma = 0 is a non-analytic limit (c = 1, the formula degenerates)"
        )
    _check_gamma(gamma)
    if n_sites < 4:
        raise ValueError("n_sites must be >= 4")
    c = cos_2alpha(gamma)
    s2 = 1.0 - c * c  # sin^2(2 alpha)
    denom = 1.0 + branch * c ** n_sites
    closed = c ** (n_sites - 2) * s2 / denom
    p_off = s2 * (1.0 + branch * c ** (n_sites - 2)) / (2.0 * denom)
    p_iii = s2 * (1.0 - branch * c ** (n_sites - 2)) / (4.0 * denom)
    return ConcurrenceBreakdown(
        p_offdiag=p_off,
        p_iii=p_iii,
        c_simplified=0.5 * p_off - p_iii,
        closed_form=closed,
        decay_base=c,
    )


def default_lambda_grid(lambda_max: float = 10.0, n_points: int = 201) -> np.ndarray:
    """Uniform grid on [-lambda_max, lambda_max] used by the CLI emitters."""
    if lambda_max <= 0.0 or n_points < 2:
        raise ValueError("need lambda_max > 0 and n_points >= 2")
    return np.linspace(-lambda_max, lambda_max, n_points)


def genfun_factorized(
    gamma: float, n_sites: int, branch: int, lambda_grid: np.ndarray
) -> GenFunSeries:
    """G(lambda) of one factorized product state.

    Per-site factor cos(lambda/N) +- i sin(lambda/N) sin(2 alpha), raised to N.
    """
    _check_branch(branch)
    c = cos_2alpha(gamma)
    lam = np.asarray(lambda_grid, dtype=float)
    phi = lam / n_sites
    s2a = np.sqrt(1.0 - c * c)  # sin(2 alpha)
    values = (np.cos(phi) + 1j * branch * np.sin(phi) * s2a) ** n_sites
    label = StateLabel.FACT_PLUS if branch > 0 else StateLabel.FACT_MINUS
    return GenFunSeries(label, lam, values, n_sites)


def genfun_cross(
    gamma: float, n_sites: int, lambda_grid: np.ndarray
) -> GenFunSeries:
    """Cross series G~(lambda) between the two factorized states.

    Per-site factor cos(lambda/N) cos(2 alpha), raised to N; real, and equal
    for both orderings of the bra/ket pair.  At lambda = 0 it reduces to the
    overlap c^N rather than 1.
    """
    c = cos_2alpha(gamma)
    lam = np.asarray(lambda_grid, dtype=float)
    values = ((np.cos(lam / n_sites) * c) ** n_sites).astype(complex)
    return GenFunSeries(StateLabel.CROSS_PM, lam, values, n_sites)


def genfun_symmetric(
    gamma: float, n_sites: int, branch: int, lambda_grid: np.ndarray
) -> tuple[GenFunSeries, GenFunSeries]:
    """G(lambda) of a symmetric (cat) state, plus its interference deficit.

    The cat-state series assembles the two factorized series and the two
    cross series, G = [G+ + G- +- (G~ + G~)] / (4 u+-^2); the cross terms
    carry the branch sign so that G(0) = 1 on both branches.  The deficit is
    Delta G = G - (G+ + G-)/2, the difference from the equal-weight mixture
    of the two broken-symmetry branches; |Delta G| decays exponentially in N
    at fixed lambda.
    """
    _check_branch(branch)
    data = factorization_data(gamma, n_sites)
    lam = np.asarray(lambda_grid, dtype=float)
    g_plus = genfun_factorized(gamma, n_sites, +1, lam).values
    g_minus = genfun_factorized(gamma, n_sites, -1, lam).values
    g_cross = genfun_cross(gamma, n_sites, lam).values
    u_sq = ((1.0 + branch * data.overlap) / 2.0)  # u_{+-}^2
    g_sym = (g_plus + g_minus + branch * 2.0 * g_cross) / (4.0 * u_sq)
    delta = g_sym - 0.5 * (g_plus + g_minus)
    label = StateLabel.SYM_PLUS if branch > 0 else StateLabel.SYM_MINUS
    return (
        GenFunSeries(label, lam, g_sym, n_sites),
        GenFunSeries(StateLabel.DELTA, lam, delta, n_sites),
    )
