"""Brute-force dense oracle for small chains (N <= 14).

Everything here works in the full 2^N spin basis and serves as ground truth
for the analytic modules: Hamiltonian construction for both models,
parity-resolved spectra, explicit product/superposition states, two-spin
reduced density matrices, Wootters concurrence, and exact generating-function
matrix elements.

Basis convention (shared with the CSV emitters): basis states are indexed by
bitmask, bit l set means spin l points down, site 0 is the leftmost spin and
occupies the least significant bit.  The spin-flip parity operator
P = prod_l sz_l is diagonal with entry (-1)^popcount.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .params import ChainParams, Model

#: Hard cap on chain length; a dense 2^N x 2^N matrix at N = 14 already
#: occupies ~2 GB.  Configurable per call.
DEFAULT_SITE_CAP = 14


def _check_cap(n_sites: int, site_cap: int) -> None:
    if n_sites > site_cap:
        dim = 1 << n_sites
        raise ValueError(
            f"n_sites={n_sites} exceeds the oracle cap {site_cap}; a dense "
            f"Hamiltonian would need {dim}^2 * 8 bytes = "
            f"{dim * dim * 8 / 1e9:.1f} GB"
        )


def _site_bits(indices: np.ndarray, n_sites: int) -> np.ndarray:
    """Bit matrix: entry [s, l] is bit l of basis index s (1 = spin l down)."""
    return (indices[:, None] >> np.arange(n_sites)) & 1


@dataclass
class DenseState:
    """State vector over the 2^N bitmask basis."""

    amplitudes: np.ndarray = field(repr=False)
    n_sites: int
    normalized: bool = True

    def __post_init__(self) -> None:
        self.amplitudes = np.asarray(self.amplitudes, dtype=complex)
        if self.amplitudes.shape != (1 << self.n_sites,):
            raise ValueError(
                f"expected {1 << self.n_sites} amplitudes for n_sites={self.n_sites}"
            )
        if self.normalized:
            norm = np.linalg.norm(self.amplitudes)
            if abs(norm - 1.0) > 1e-12:
                raise ValueError(f"state is not normalized (norm = {norm!r})")


@dataclass
class TwoSpinRDM:
    """4x4 reduced density matrix of a site pair, basis {uu, ud, du, dd}."""

    matrix: np.ndarray = field(repr=False)
    sites: tuple[int, int]

    def __post_init__(self) -> None:
        m = np.asarray(self.matrix, dtype=complex)
        if m.shape != (4, 4):
            raise ValueError("two-spin density matrix must be 4x4")
        if np.abs(m - m.conj().T).max() > 1e-10:
            raise ValueError("two-spin density matrix must be Hermitian")
        if abs(np.trace(m).real - 1.0) > 1e-10:
            raise ValueError("two-spin density matrix must have unit trace")
        self.matrix = m


def build_hamiltonian(
    params: ChainParams, site_cap: int = DEFAULT_SITE_CAP
) -> np.ndarray:
    """Dense periodic-chain Hamiltonian of either model (real symmetric).

    XY:  H = -sum_l [(1+g)/2 sx sx + (1-g)/2 sy sy] - h sum_l sz
    XXX: H = -sum_l (sx sx + sy sy + sz sz)

    Both commute with the parity operator; the XXX Hamiltonian additionally
    commutes with every component of the total spin.
    """
    n = params.n_sites
    _check_cap(n, site_cap)
    dim = 1 << n
    s = np.arange(dim)
    bits = _site_bits(s, n)
    z = 1.0 - 2.0 * bits
    H = np.zeros((dim, dim))

    if params.model is Model.XY:
        H[s, s] = -params.h * z.sum(axis=1)
    else:
        H[s, s] = -(z * np.roll(z, -1, axis=1)).sum(axis=1)

    for l in range(n):
        m = (l + 1) % n
        mask = (1 << l) | (1 << m)
        t = s ^ mask
        aligned = bits[:, l] == bits[:, m]
        if params.model is Model.XY:
            # <s^mask| -[(1+g)/2 XX + (1-g)/2 YY] |s>: the YY element is +1
            # for anti-aligned bits and -1 for aligned ones.
            vals = np.where(aligned, -params.gamma, -1.0)
        else:
            vals = np.where(aligned, 0.0, -2.0)
        H[t, s] += vals
    return H


def parity_diagonal(n_sites: int) -> np.ndarray:
    """Diagonal of P = prod_l sz_l in the bitmask basis: (-1)^popcount."""
    bits = _site_bits(np.arange(1 << n_sites), n_sites)
    return np.where(bits.sum(axis=1) % 2 == 0, 1.0, -1.0)


def parity_resolved_minima(
    H: np.ndarray, parity_diag: np.ndarray, expectation_tol: float = 1e-8
) -> tuple[float, float]:
    """Lowest eigenvalue in each parity class of a parity-commuting Hamiltonian.

    Eigenvectors are classified by their parity expectation (+-1 within
    ``expectation_tol``).  When degeneracies mix the classes (expectation away
    from +-1), the spectrum is recomputed inside each parity eigenspace
    instead, which is exact because the parity operator is diagonal here.

    Returns
    -------
    (E_even_min, E_odd_min)
    """
    evals, evecs = np.linalg.eigh(H)
    expect = (parity_diag[:, None] * np.abs(evecs) ** 2).sum(axis=0)
    if np.all(np.abs(np.abs(expect) - 1.0) < expectation_tol):
        even = evals[expect > 0.0]
        odd = evals[expect < 0.0]
        if even.size and odd.size:
            return float(even.min()), float(odd.min())
    # Degenerate (or one-sided) classification: project onto the parity
    # eigenspaces first and diagonalize each block.
    out = []
    for sign in (1.0, -1.0):
        keep = np.nonzero(parity_diag == sign)[0]
        out.append(float(np.linalg.eigvalsh(H[np.ix_(keep, keep)]).min()))
    return out[0], out[1]


def _sector_block(params: ChainParams, even_sector: bool) -> np.ndarray:
    """One parity block of the Hamiltonian, built without the full matrix."""
    n = params.n_sites
    dim = 1 << n
    s = np.arange(dim)
    parity_even = (_site_bits(s, n).sum(axis=1) % 2) == 0
    keep = s[parity_even if even_sector else ~parity_even]
    pos = np.full(dim, -1)
    pos[keep] = np.arange(keep.size)
    bits = _site_bits(keep, n)
    z = 1.0 - 2.0 * bits

    Hb = np.zeros((keep.size, keep.size))
    rows = np.arange(keep.size)
    if params.model is Model.XY:
        Hb[rows, rows] = -params.h * z.sum(axis=1)
    else:
        Hb[rows, rows] = -(z * np.roll(z, -1, axis=1)).sum(axis=1)
    for l in range(n):
        m = (l + 1) % n
        mask = (1 << l) | (1 << m)
        t = pos[keep ^ mask]  # two flipped bits keep the parity sector
        aligned = bits[:, l] == bits[:, m]
        if params.model is Model.XY:
            vals = np.where(aligned, -params.gamma, -1.0)
        else:
            vals = np.where(aligned, 0.0, -2.0)
        Hb[t, rows] += vals
    return Hb


def sector_minima(
    params: ChainParams, site_cap: int = DEFAULT_SITE_CAP
) -> tuple[float, float]:
    """(E_even_min, E_odd_min) via direct diagonalization of the parity blocks.

    Equivalent to :func:`parity_resolved_minima` on the full matrix but twice
    as memory-lean and robust at exact degeneracies; used for parameter
    sweeps.
    """
    _check_cap(params.n_sites, site_cap)
    e_even = np.linalg.eigvalsh(_sector_block(params, True)).min()
    e_odd = np.linalg.eigvalsh(_sector_block(params, False)).min()
    return float(e_even), float(e_odd)


def ground_state_degeneracy(
    H: np.ndarray, degeneracy_tol: float = 1e-8
) -> tuple[float, int]:
    """Ground energy and the number of levels within ``degeneracy_tol`` of it."""
    evals = np.linalg.eigvalsh(H)
    return float(evals[0]), int(np.count_nonzero(evals <= evals[0] + degeneracy_tol))


def build_product_state(
    site_angles: Sequence[tuple[float, float]],
    site_cap: int = DEFAULT_SITE_CAP,
) -> DenseState:
    """Tensor product of per-site states cos(theta_l)|up> + e^{i phi_l} sin(theta_l)|down>."""
    n = len(site_angles)
    if n < 1:
        raise ValueError("need at least one site")
    _check_cap(n, site_cap)
    amps = np.array([1.0 + 0.0j])
    for theta, phi in site_angles:
        site = np.array([np.cos(theta), np.exp(1j * phi) * np.sin(theta)])
        # prepend as the slow factor so site l lands on bit l
        amps = np.kron(site, amps)
    return DenseState(amplitudes=amps, n_sites=n)


def symmetrize_state(
    states: Sequence[DenseState],
    weights: Sequence[complex],
    zero_norm_tol: float = 1e-10,
) -> DenseState:
    """Normalized weighted superposition sum_i w_i |psi_i>.

    Raises ValueError when the combination cancels to (numerical) zero, e.g.
    the full-circle symmetric combination on an odd-length isotropic chain.
    """
    if len(states) != len(weights) or not states:
        raise ValueError("need matching, non-empty states and weights")
    n = states[0].n_sites
    if any(st.n_sites != n for st in states):
        raise ValueError("all states must share n_sites")
    acc = np.zeros(1 << n, dtype=complex)
    for st, w in zip(states, weights):
        acc += w * st.amplitudes
    norm = np.linalg.norm(acc)
    if norm < zero_norm_tol:
        raise ValueError(
            f"superposition has zero norm ({norm:.2e}); the weighted "
            "components cancel"
        )
    return DenseState(amplitudes=acc / norm, n_sites=n)


def parity_expectation(state: DenseState) -> float:
    """Expectation of P = prod_l sz_l in ``state``."""
    pd = parity_diagonal(state.n_sites)
    return float((pd * np.abs(state.amplitudes) ** 2).sum())


def reduce_two_spin(state: DenseState, i: int, j: int) -> TwoSpinRDM:
    """Two-spin reduced density matrix of sites (i, j), basis {uu, ud, du, dd}."""
    n = state.n_sites
    if i == j:
        raise ValueError("need two distinct sites")
    if not (0 <= i < n and 0 <= j < n):
        raise ValueError(f"sites must lie in [0, {n})")
    tensor = state.amplitudes.reshape([2] * n)  # axis a holds bit n-1-a
    tensor = np.moveaxis(tensor, [n - 1 - i, n - 1 - j], [0, 1])
    m = tensor.reshape(4, -1)
    rho = m @ m.conj().T
    rho = 0.5 * (rho + rho.conj().T)
    return TwoSpinRDM(matrix=rho, sites=(i, j))


def wootters_concurrence(rdm: TwoSpinRDM, psd_tol: float = 1e-10) -> float:
    """Wootters concurrence of a two-qubit density matrix.

    Standard spin-flip recipe: sort the square roots of the eigenvalues of
    rho (sy x sy) rho* (sy x sy) in decreasing order and return
    max(0, l1 - l2 - l3 - l4).  With rho = Psi Psi^dagger those roots equal
    the singular values of the symmetric matrix Psi^T (sy x sy) Psi, which
    avoids squaring and keeps rank-deficient inputs at machine precision.
    """
    rho = rdm.matrix
    evals, vecs = np.linalg.eigh(rho)
    if evals.min() < -psd_tol:
        raise ValueError("density matrix is not positive semidefinite")
    evals = np.clip(evals, 0.0, None)
    # eigensolver noise on rank-deficient matrices would blow up to sqrt(eps)
    evals[evals < 1e-13 * evals.max()] = 0.0
    factor = vecs * np.sqrt(evals)  # rho = factor @ factor^dagger
    sy_sy = np.array(
        [
            [0.0, 0.0, 0.0, -1.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
            [-1.0, 0.0, 0.0, 0.0],
        ]
    )
    roots = np.linalg.svd(factor.T @ sy_sy @ factor, compute_uv=False)
    return float(max(0.0, roots[0] - roots[1] - roots[2] - roots[3]))


def genfun_matrix_element(bra: DenseState, ket: DenseState, lam: float) -> complex:
    """Exact matrix element <bra| exp(i lambda/N sum_l sx_l) |ket>.

    The rotation factorizes over sites, so it is applied as N exact 2x2
    single-site rotations; no global matrix exponential is formed.
    """
    if bra.n_sites != ket.n_sites:
        raise ValueError("bra and ket must share n_sites")
    n = ket.n_sites
    phi = lam / n
    u = np.array(
        [
            [np.cos(phi), 1j * np.sin(phi)],
            [1j * np.sin(phi), np.cos(phi)],
        ]
    )
    amps = ket.amplitudes.reshape([2] * n)
    for axis in range(n):
        amps = np.moveaxis(np.tensordot(u, amps, axes=(1, axis)), 0, axis)
    return complex(np.vdot(bra.amplitudes, amps.reshape(-1)))
