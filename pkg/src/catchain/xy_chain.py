"""Exact finite-size solution of the periodic transverse-field XY chain.

The chain is solved separately in the two spin-flip parity sectors.  The even
sector uses the half-integer momentum grid k = 1/2, 3/2, ..., N-1/2 and the
odd sector the integer grid k = 0, 1, ..., N-1 (mode angle 2 pi k / N).  Each
mode carries the quasiparticle energy

    Lambda_k = 2 sqrt((h - cos a_k)^2 + gamma^2 sin^2 a_k),

the Bogoliubov vacuum of a sector has energy -(1/2) sum_k Lambda_k, and the
fermion-number parity of the odd-sector vacuum follows the k = 0 rule: the
k = 0 mode is occupied (vacuum parity odd) for h < 1 and empty for h > 1.
The lowest *physical* level of a sector is the vacuum when the vacuum parity
matches the sector label and vacuum + min_k Lambda_k otherwise.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .params import ChainParams, Model, Parity

#: Vacuum energy prefactor in E_vac = prefactor * sum_k Lambda_k.  The value
#: -1/2 follows from the diagonalized form sum_k Lambda_k (n_k - 1/2) and is
#: cross-validated against dense diagonalization; the validation harness
#: mutates this constant to prove the energy checks would catch a wrong value.
_VACUUM_PREFACTOR = -0.5

#: Default scan resolution for level-crossing searches.  Crossings accumulate
#: just below the factorizing field for larger N; these defaults resolve all
#: of them for N <= 16.
DEFAULT_CROSSING_STEP = 5e-4
DEFAULT_CROSSING_TOL = 1e-8


def factorizing_field(gamma: float) -> float:
    """Field h_F = sqrt(1 - gamma^2) at which the ground state factorizes."""
    if not 0.0 < gamma <= 1.0:
        raise ValueError(f"need 0 < gamma <= 1, got {gamma!r}")
    return float(np.sqrt(1.0 - gamma * gamma))


def _require_xy(params: ChainParams) -> None:
    if params.model is not Model.XY:
        raise ValueError("this operation is defined for the XY model only")


def quasiparticle_energy(params: ChainParams, k_angle) -> float | np.ndarray:
    """Quasiparticle energy Lambda(k) = 2 sqrt((h - cos k)^2 + gamma^2 sin^2 k).

    ``k_angle`` is the mode angle 2 pi k / N in radians; scalars and arrays
    are both accepted.  Always >= 0.
    """
    _require_xy(params)
    a = np.asarray(k_angle, dtype=float)
    lam = 2.0 * np.sqrt(
        (params.h - np.cos(a)) ** 2 + params.gamma ** 2 * np.sin(a) ** 2
    )
    return float(lam) if np.isscalar(k_angle) else lam


def bogoliubov_angle(params: ChainParams, k_angle) -> float | np.ndarray:
    """Bogoliubov angle solving tan(2 theta_k) = -gamma sin k / (h - cos k).

    Branch: 2 theta_k = atan2(-gamma sin k, h - cos k), i.e. the rotation that
    maps the mode vector (h - cos k, -gamma sin k) onto the positive axis and
    therefore diagonalizes every momentum mode with Lambda_k >= 0.  The angle
    is antisymmetric, theta(-k) = -theta(k).

    At a gap-closing degeneracy (h = cos k and gamma sin k = 0) the angle is
    undefined; 0 is returned and a warning is emitted.
    """
    _require_xy(params)
    a = np.asarray(k_angle, dtype=float)
    x = params.h - np.cos(a)
    y = -params.gamma * np.sin(a)
    degenerate = (x == 0.0) & (y == 0.0)
    if np.any(degenerate):
        warnings.warn(
            "gap closes at this mode (h = cos k, gamma sin k = 0); "
            "Bogoliubov angle undefined, returning 0",
            stacklevel=2,
        )
    theta = 0.5 * np.arctan2(y, x)
    theta = np.where(degenerate, 0.0, theta)
    return float(theta) if np.isscalar(k_angle) else theta


def momentum_indices(n_sites: int, parity: Parity) -> np.ndarray:
    """Mode indices k of a parity sector: half-integers (even), integers (odd)."""
    if parity is Parity.EVEN:
        return np.arange(n_sites) + 0.5
    return np.arange(n_sites, dtype=float)


@dataclass
class SectorSpectrum:
    """Free-fermion data of one parity sector at fixed (N, gamma, h)."""

    parity: Parity
    momenta: np.ndarray = field(repr=False)
    angles: np.ndarray = field(repr=False)
    lambda_k: np.ndarray = field(repr=False)
    theta_k: np.ndarray = field(repr=False)
    vacuum_energy: float
    vacuum_number_parity: Parity
    lowest_physical_energy: float
    #: True when h = 1 exactly in the odd sector, where the k = 0 occupation
    #: rule is discontinuous; the h < 1 branch is used in that case.
    h_critical_flagged: bool = False


def sector_spectrum(params: ChainParams, parity: Parity) -> SectorSpectrum:
    """Solve one parity sector: momentum grid, energies, angles, vacuum data."""
    _require_xy(params)
    n, h = params.n_sites, params.h
    k = momentum_indices(n, parity)
    angles = 2.0 * np.pi * k / n
    lam = np.asarray(quasiparticle_energy(params, angles))

    x = h - np.cos(angles)
    y = -params.gamma * np.sin(angles)
    theta = 0.5 * np.arctan2(y, x)
    theta[(x == 0.0) & (y == 0.0)] = 0.0

    vacuum_energy = float(_VACUUM_PREFACTOR * lam.sum())

    flagged = False
    if parity is Parity.EVEN:
        # Every even-sector mode is member of a (k, N-k) pair; the vacuum
        # holds zero or two particles per pair and is always even.
        vacuum_parity = Parity.EVEN
    else:
        if h == 1.0:
            flagged = True
            warnings.warn(
                "h = 1 exactly: the k = 0 occupation rule is discontinuous; "
                "using the h < 1 branch (vacuum parity odd)",
                stacklevel=2,
            )
        vacuum_parity = Parity.ODD if h <= 1.0 else Parity.EVEN

    if vacuum_parity is parity:
        lowest = vacuum_energy
    else:
        lowest = vacuum_energy + float(lam.min())

    return SectorSpectrum(
        parity=parity,
        momenta=k,
        angles=angles,
        lambda_k=lam,
        theta_k=theta,
        vacuum_energy=vacuum_energy,
        vacuum_number_parity=vacuum_parity,
        lowest_physical_energy=lowest,
        h_critical_flagged=flagged,
    )


def sector_energy_curves(
    n_sites: int, gamma: float, h_values: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """Lowest physical even and odd energies on a whole field grid at once.

    Vectorized version of :func:`sector_spectrum` used by crossing scans and
    field sweeps.  At h = 1 the two branches of the k = 0 rule give the same
    lowest odd energy (the gap closes there), so the sweep is continuous.
    """
    h = np.atleast_1d(np.asarray(h_values, dtype=float))
    out = []
    for parity in (Parity.EVEN, Parity.ODD):
        a = 2.0 * np.pi * momentum_indices(n_sites, parity) / n_sites
        lam = 2.0 * np.sqrt(
            (h[:, None] - np.cos(a)) ** 2 + gamma ** 2 * np.sin(a) ** 2
        )
        vac = _VACUUM_PREFACTOR * lam.sum(axis=1)
        if parity is Parity.EVEN:
            out.append(vac)
        else:
            out.append(np.where(h <= 1.0, vac, vac + lam.min(axis=1)))
    return out[0], out[1]


@dataclass
class CrossingSet:
    """Fields h_i in (0, 1] where the lowest odd and even levels cross."""

    params: ChainParams
    crossings: np.ndarray
    refinement_tolerance: float


def find_crossings(
    params: ChainParams,
    h_grid_step: float = DEFAULT_CROSSING_STEP,
    tol: float = DEFAULT_CROSSING_TOL,
) -> CrossingSet:
    """Locate all sign changes of E_odd(h) - E_even(h) on (0, 1].

    A uniform scan with step ``h_grid_step`` brackets the sign changes and
    each bracket is refined by bisection to ``tol``.  For even N exactly N/2
    crossings exist, the last at the factorizing field; if the scan finds a
    different number the grid failed to separate neighboring crossings and a
    finer step is requested via ValueError.
    """
    _require_xy(params)
    if h_grid_step <= 0.0 or tol <= 0.0:
        raise ValueError("h_grid_step and tol must be positive")
    n = params.n_sites
    n_cells = int(round(1.0 / h_grid_step))
    grid = np.linspace(h_grid_step, 1.0, n_cells)
    e_even, e_odd = sector_energy_curves(n, params.gamma, grid)
    gap = e_odd - e_even

    def gap_at(h: float) -> float:
        ee, eo = sector_energy_curves(n, params.gamma, np.array([h]))
        return float(eo[0] - ee[0])

    crossings: list[float] = []
    for i in np.nonzero(np.sign(gap[:-1]) * np.sign(gap[1:]) < 0)[0]:
        lo, hi = float(grid[i]), float(grid[i + 1])
        f_lo = float(gap[i])
        while hi - lo > tol:
            mid = 0.5 * (lo + hi)
            f_mid = gap_at(mid)
            if f_mid == 0.0:
                lo = hi = mid
                break
            if f_lo * f_mid < 0.0:
                hi = mid
            else:
                lo, f_lo = mid, f_mid
        crossings.append(0.5 * (lo + hi))
    # A grid point sitting exactly on a root leaves no sign change; count it.
    for i in np.nonzero(gap == 0.0)[0]:
        crossings.append(float(grid[i]))

    crossings.sort()
    if n % 2 == 0 and len(crossings) != n // 2:
        raise ValueError(
            f"found {len(crossings)} crossings for N={n} where {n // 2} are "
            f"expected; h_grid_step={h_grid_step:g} is too coarse to isolate "
            "neighboring sign changes, rerun with a finer step"
        )
    return CrossingSet(
        params=params,
        crossings=np.asarray(crossings),
        refinement_tolerance=tol,
    )
