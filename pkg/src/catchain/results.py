"""Result containers shared by the XY and XXX observable modules."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np


class StateLabel(Enum):
    """Which state (or state pair) a generating-function series belongs to."""

    SYM_PLUS = "symmetric+"        # even cat state
    SYM_MINUS = "symmetric-"       # odd cat state
    FACT_PLUS = "factorized+"      # broken-symmetry product state, + branch
    FACT_MINUS = "factorized-"     # broken-symmetry product state, - branch
    CROSS_PM = "cross+-"           # off-diagonal matrix element <+|...|->
    CROSS_MP = "cross-+"           # off-diagonal matrix element <-|...|+>
    XXX_MEMBER = "xxx-member"      # one Bloch product state of the manifold
    XXX_SYMMETRIC = "xxx-symmetric"  # rotation-invariant superposition
    DELTA = "delta"                # interference deficit Delta G


@dataclass
class GenFunSeries:
    """Sampled order-parameter generating function G(lambda).

    G is Tr[rho exp(i lambda/N sum_l sx_l)], the Fourier transform of the
    probability distribution of M_x = (sum_l sx_l)/N.  For a normalized state
    G(0) = 1; for the cross series G~ the value at 0 is the state overlap.
    """

    state_label: StateLabel
    lambda_grid: np.ndarray = field(repr=False)
    values: np.ndarray = field(repr=False)
    n_sites: int


@dataclass
class ConcurrenceBreakdown:
    """Two-spin concurrence of a symmetric state, split into its ingredients.

    ``p_offdiag`` is the expectation of |uu><dd| + |dd><uu| on the two-spin
    reduced state, ``p_iii`` the population of |ud><ud|, and
    ``c_simplified = p_offdiag/2 - p_iii`` the simplified ferromagnetic-form
    concurrence built from them.  ``closed_form`` is the model's headline
    closed-form value; the dense-oracle Wootters concurrence equals it, and
    equals 2 * c_simplified on the even branch (the empirical ratio is reported by
    the validation suite rather than assumed).  ``decay_base`` is the
    large-N decay base per added site (XY only).
    """

    p_offdiag: float
    p_iii: float
    c_simplified: float
    closed_form: float
    c_wootters: float | None = None
    decay_base: float | None = None
