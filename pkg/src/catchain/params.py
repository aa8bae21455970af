"""Model parameters shared by the analytic solvers and the dense oracle.

Conventions fixed here and used everywhere else in the package:

* XY chain: ``H = -sum_l [ (1+gamma)/2 sx_l sx_{l+1} + (1-gamma)/2 sy_l sy_{l+1} ]
  - h sum_l sz_l`` with periodic boundaries (ferromagnetic coupling, J = -1;
  the field term is oriented so the fully polarized spin-up state is favored
  for large h).
* XXX chain: ``H = -sum_l (sx sx + sy sy + sz sz)`` with periodic boundaries
  (ferromagnetic, J = +1), so the fully polarized product state minimizes the
  energy.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class Model(Enum):
    """Which spin chain a parameter set describes."""

    XY = "xy"
    XXX = "xxx"


class Parity(Enum):
    """Spin-flip (Z2) parity label: eigenvalue of P = prod_l sz_l."""

    EVEN = "even"
    ODD = "odd"


#: Smallest chain accepted anywhere.  For N in {2, 3} the periodic bond sum
#: double-counts bonds and momentum-grid formulas become convention dependent,
#: so those sizes are rejected instead of special-cased.
MIN_SITES = 4


@dataclass(frozen=True)
class ChainParams:
    """Single source of truth for one run of either model.

    Parameters
    ----------
    model : Model
        ``Model.XY`` or ``Model.XXX``.
    n_sites : int
        Number of spins N (periodic chain), N >= 4.
    gamma : float, optional
        XY anisotropy, 0 < gamma <= 1.  Ignored (must be None) for XXX.
    h : float, optional
        XY transverse field in units of |J|, h >= 0.  Ignored for XXX.
    """

    model: Model
    n_sites: int
    gamma: float | None = None
    h: float | None = None

    def __post_init__(self) -> None:
        if not isinstance(self.n_sites, int) or self.n_sites < MIN_SITES:
            raise ValueError(
                f"n_sites must be an integer >= {MIN_SITES}, got {self.n_sites!r}"
            )
        if self.model is Model.XY:
            if self.gamma is None or not 0.0 < self.gamma <= 1.0:
                raise ValueError(f"XY model needs 0 < gamma <= 1, got {self.gamma!r}")
            if self.h is None or self.h < 0.0:
                raise ValueError(f"XY model needs h >= 0, got {self.h!r}")
        elif self.model is Model.XXX:
            if self.gamma is not None or self.h is not None:
                raise ValueError("gamma and h are XY-only parameters")

    @property
    def coupling_sign(self) -> float:
        """Coupling constant J of the written Hamiltonian: -1 for XY, +1 for XXX."""
        return -1.0 if self.model is Model.XY else +1.0


def xy_params(n_sites: int, gamma: float, h: float) -> ChainParams:
    """Shorthand constructor for XY parameters."""
    return ChainParams(Model.XY, n_sites, gamma=gamma, h=h)


def xxx_params(n_sites: int) -> ChainParams:
    """Shorthand constructor for XXX parameters."""
    return ChainParams(Model.XXX, n_sites)
