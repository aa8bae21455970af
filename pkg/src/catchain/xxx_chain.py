"""Ground-state manifold of the isotropic ferromagnetic chain.

The fully polarized product states |Phi(theta, phi)> = prod_l [cos(theta)|up>
+ e^{i phi} sin(theta)|down>] all minimize the isotropic Hamiltonian, with
pairwise overlap kernel [cos t cos t' + e^{i(phi-phi')} sin t sin t']^N.  On
the phi = 0 circle their rotation-invariant superposition

    |Phi_e> = (1/Norm) int_0^{2pi} dtheta |Phi_theta>

exists for even N only (for odd N every amplitude integrates to zero).  All
observables of |Phi_e> reduce to angular integrals of trigonometric
polynomials of degree <= N + 2 per variable, evaluated here with the exact
periodic trapezoid rule on M = 2N + 8 nodes; closed forms (binomial norm,
concurrence 1/(2(N-1))) double as self-checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from .quadrature import PeriodicGrid, gaussian_ratio_asymptote, periodic_grid
from .results import ConcurrenceBreakdown, GenFunSeries, StateLabel

#: Direct complex powers g**N are used up to this N; beyond it the integrand
#: is evaluated as exp(N log g) to avoid underflow of |g|^N near machine
#: minimum (for integer N the principal-branch log reproduces the power
#: exactly, so no branch tracking is needed).
_DIRECT_POWER_MAX = 1000


@dataclass(frozen=True)
class BlochProductState:
    """Product of identical single-spin states cos(theta)|up> + e^{i phi} sin(theta)|down>."""

    theta: float
    phi: float
    n_sites: int

    def __post_init__(self) -> None:
        if self.n_sites < 1:
            raise ValueError("n_sites must be positive")


@dataclass(frozen=True)
class SymmetricStateSpec:
    """Normalization data of the rotation-invariant symmetric state."""

    n_sites: int
    norm_sq: float
    quadrature_points: int


def overlap_kernel(s1: BlochProductState, s2: BlochProductState) -> complex:
    """Inner product <s1|s2> = [cos t1 cos t2 + e^{i(phi2-phi1)} sin t1 sin t2]^N."""
    if s1.n_sites != s2.n_sites:
        raise ValueError("states live on chains of different length")
    per_site = (
        np.cos(s1.theta) * np.cos(s2.theta)
        + np.exp(1j * (s2.phi - s1.phi)) * np.sin(s1.theta) * np.sin(s2.theta)
    )
    return complex(per_site ** s1.n_sites)


def _check_even(n_sites: int) -> None:
    if n_sites % 2 != 0:
        raise ValueError(
            f"n_sites must be even, got {n_sites}: the full-circle symmetric "
            "state vanishes identically for odd N (every amplitude carries an "
            "odd-power cosine moment)"
        )


def manifold_grid(n_sites: int, quadrature_points: int | None = None) -> PeriodicGrid:
    """Angular grid for the symmetric-state integrals (default M = 2N + 8 nodes).

    The integrands are trigonometric polynomials of degree <= N + 2 in each
    angle, so any M > N + 2 is exact; smaller M is rejected.
    """
    m = 2 * n_sites + 8 if quadrature_points is None else quadrature_points
    if m <= n_sites + 2:
        raise ValueError(
            f"{m} quadrature nodes cannot integrate degree-{n_sites + 2} "
            f"trigonometric polynomials exactly; need more than {n_sites + 2}"
        )
    return periodic_grid(m)


def xxx_norm_sq_closed_form(n_sites: int) -> float:
    """Closed form of the symmetric-state norm: (2 pi)^2 binom(N, N/2) / 2^N."""
    _check_even(n_sites)
    return (2.0 * np.pi) ** 2 * comb(n_sites, n_sites // 2) / 2.0 ** n_sites


def xxx_norm_sq(n_sites: int, quadrature_points: int | None = None) -> float:
    """Norm^2 of the symmetric state: integral of cos^N(t - t') over both angles."""
    _check_even(n_sites)
    grid = manifold_grid(n_sites, quadrature_points)
    diff = grid.nodes[:, None] - grid.nodes[None, :]
    return float(grid.weight ** 2 * (np.cos(diff) ** n_sites).sum())


def symmetric_state_spec(
    n_sites: int, quadrature_points: int | None = None
) -> SymmetricStateSpec:
    """Normalization record of |Phi_e| for even N."""
    grid = manifold_grid(n_sites, quadrature_points)
    return SymmetricStateSpec(
        n_sites=n_sites,
        norm_sq=xxx_norm_sq(n_sites, quadrature_points),
        quadrature_points=grid.n_nodes,
    )


def xxx_concurrence(
    n_sites: int, quadrature_points: int | None = None
) -> ConcurrenceBreakdown:
    """Two-spin concurrence of the symmetric state by exact quadrature.

    The off-diagonal and population terms are the angular averages

        p_offdiag = <int [cos^2 t sin^2 t' + cos^2 t' sin^2 t] cos^{N-2}(t-t')>
        p_iii     = <int cos t cos t' sin t sin t' cos^{N-2}(t-t')>

    normalized by the state norm; c_simplified = p_offdiag/2 - p_iii equals the
    closed form 1/(2(N-1)) for even N (asserted to 1e-12 by the tests), and
    is independent of which spin pair is traced out.
    """
    _check_even(n_sites)
    if n_sites < 4:
        raise ValueError("n_sites must be >= 4")
    grid = manifold_grid(n_sites, quadrature_points)
    t = grid.nodes[:, None]
    tp = grid.nodes[None, :]
    kernel = np.cos(t - tp) ** (n_sites - 2)
    norm_sq = (np.cos(t - tp) ** n_sites).sum()  # common weight cancels
    p_off = (
        ((np.cos(t) * np.sin(tp)) ** 2 + (np.cos(tp) * np.sin(t)) ** 2) * kernel
    ).sum() / norm_sq
    p_iii = (
        (np.cos(t) * np.cos(tp) * np.sin(t) * np.sin(tp)) * kernel
    ).sum() / norm_sq
    return ConcurrenceBreakdown(
        p_offdiag=float(p_off),
        p_iii=float(p_iii),
        c_simplified=float(0.5 * p_off - p_iii),
        closed_form=1.0 / (2.0 * (n_sites - 1)),
    )


def xxx_concurrence_asymptotic(n_sites: int) -> float:
    """Steepest-descent limit 1/(2N) of :func:`xxx_concurrence`."""
    return gaussian_ratio_asymptote(n_sites)


def _power(z: np.ndarray, n: int) -> np.ndarray:
    """z**n for complex arrays, evaluated in log space for very large n."""
    if n <= _DIRECT_POWER_MAX:
        return z ** n
    out = np.zeros_like(z, dtype=complex)
    nz = z != 0
    out[nz] = np.exp(n * np.log(z[nz]))
    return out


def xxx_genfun_member(
    theta: float, n_sites: int, lambda_grid: np.ndarray
) -> GenFunSeries:
    """G(lambda) of one manifold member |Phi(theta, 0)>.

    Per-site factor cos(lambda/N) + i sin(lambda/N) sin(2 theta), raised to N;
    tends to exp(i lambda sin 2 theta) at large N, the generating function of
    a non-fluctuating order parameter.
    """
    lam = np.asarray(lambda_grid, dtype=float)
    phi = lam / n_sites
    base = np.cos(phi) + 1j * np.sin(phi) * np.sin(2.0 * theta)
    return GenFunSeries(StateLabel.XXX_MEMBER, lam, _power(base, n_sites), n_sites)


@dataclass
class SymmetricGenFun:
    """Generating function of |Phi_e> with its interference deficit.

    ``delta`` is the exact quadrature deficit against the uniform mixture of
    manifold members, Delta G = G_e - (1/2pi) int dtheta G_theta, which
    scales as 1/N.  ``delta_steepest`` is the saddle-point approximation
    (1/2pi) int dtheta G_theta [exp(-lambda^2 cos^2(2 theta)/2N) - 1],
    computed on the same lambda grid for comparison.
    """

    genfun: GenFunSeries
    delta: GenFunSeries
    delta_steepest: GenFunSeries


def xxx_genfun_symmetric(
    n_sites: int,
    lambda_grid: np.ndarray,
    quadrature_points: int | None = None,
) -> SymmetricGenFun:
    """G(lambda) of the symmetric state by exact double quadrature, plus Delta G."""
    _check_even(n_sites)
    grid = manifold_grid(n_sites, quadrature_points)
    lam = np.asarray(lambda_grid, dtype=float)
    t = grid.nodes[:, None]
    tp = grid.nodes[None, :]
    cos_diff = np.cos(t - tp)
    sin_sum = np.sin(t + tp)
    norm_sq = (cos_diff ** n_sites).sum()  # common weight cancels in the ratio

    values = np.empty(lam.shape, dtype=complex)
    mixture = np.empty(lam.shape, dtype=complex)
    steepest = np.empty(lam.shape, dtype=complex)
    member_base = np.cos(2.0 * grid.nodes)
    for i, l in enumerate(lam):
        phi = l / n_sites
        g = np.cos(phi) * cos_diff + 1j * np.sin(phi) * sin_sum
        values[i] = _power(g, n_sites).sum() / norm_sq
        g_member = _power(
            np.cos(phi) + 1j * np.sin(phi) * np.sin(2.0 * grid.nodes), n_sites
        )
        mixture[i] = g_member.sum() / grid.n_nodes
        steepest[i] = (
            g_member * (np.exp(-(l * l) * member_base ** 2 / (2.0 * n_sites)) - 1.0)
        ).sum() / grid.n_nodes

    return SymmetricGenFun(
        genfun=GenFunSeries(StateLabel.XXX_SYMMETRIC, lam, values, n_sites),
        delta=GenFunSeries(StateLabel.DELTA, lam, values - mixture, n_sites),
        delta_steepest=GenFunSeries(StateLabel.DELTA, lam, steepest, n_sites),
    )
