"""Finite spin chains with degenerate ground states.

Exact free-fermion solution of the periodic transverse-field XY chain, the
ground-state manifold of the isotropic ferromagnetic chain, two-spin
concurrence and order-parameter generating functions of their symmetric
(cat) states, and a dense-diagonalization oracle that cross-validates every
closed form.
"""

from .exact_diag import (
    DEFAULT_SITE_CAP,
    DenseState,
    TwoSpinRDM,
    build_hamiltonian,
    build_product_state,
    genfun_matrix_element,
    ground_state_degeneracy,
    parity_diagonal,
    parity_expectation,
    parity_resolved_minima,
    reduce_two_spin,
    sector_minima,
    symmetrize_state,
    wootters_concurrence,
)
from .params import ChainParams, Model, Parity, xy_params, xxx_params
from .quadrature import (
    PeriodicGrid,
    gaussian_ratio_asymptote,
    integrate_periodic_1d,
    integrate_periodic_2d,
    periodic_grid,
)
from .results import ConcurrenceBreakdown, GenFunSeries, StateLabel
from .validation import ValidationConfig, run_validation
from .xxx_chain import (
    BlochProductState,
    SymmetricGenFun,
    SymmetricStateSpec,
    manifold_grid,
    overlap_kernel,
    symmetric_state_spec,
    xxx_concurrence,
    xxx_concurrence_asymptotic,
    xxx_genfun_member,
    xxx_genfun_symmetric,
    xxx_norm_sq,
    xxx_norm_sq_closed_form,
)
from .xy_chain import (
    CrossingSet,
    SectorSpectrum,
    bogoliubov_angle,
    factorizing_field,
    find_crossings,
    momentum_indices,
    quasiparticle_energy,
    sector_energy_curves,
    sector_spectrum,
)
from .xy_states import (
    FactorizationData,
    concurrence_symmetric,
    cos_2alpha,
    default_lambda_grid,
    factorization_data,
    genfun_cross,
    genfun_factorized,
    genfun_symmetric,
)

__version__ = "0.1.0"

__all__ = [
    "BlochProductState",
    "ChainParams",
    "ConcurrenceBreakdown",
    "CrossingSet",
    "DEFAULT_SITE_CAP",
    "DenseState",
    "FactorizationData",
    "GenFunSeries",
    "Model",
    "Parity",
    "PeriodicGrid",
    "SectorSpectrum",
    "StateLabel",
    "SymmetricGenFun",
    "SymmetricStateSpec",
    "TwoSpinRDM",
    "ValidationConfig",
    "bogoliubov_angle",
    "build_hamiltonian",
    "build_product_state",
    "concurrence_symmetric",
    "cos_2alpha",
    "default_lambda_grid",
    "factorization_data",
    "factorizing_field",
    "find_crossings",
    "gaussian_ratio_asymptote",
    "genfun_cross",
    "genfun_factorized",
    "genfun_matrix_element",
    "genfun_symmetric",
    "ground_state_degeneracy",
    "integrate_periodic_1d",
    "integrate_periodic_2d",
    "manifold_grid",
    "momentum_indices",
    "overlap_kernel",
    "parity_diagonal",
    "parity_expectation",
    "parity_resolved_minima",
    "periodic_grid",
    "quasiparticle_energy",
    "reduce_two_spin",
    "run_validation",
    "sector_energy_curves",
    "sector_minima",
    "sector_spectrum",
    "symmetric_state_spec",
    "symmetrize_state",
    "wootters_concurrence",
    "xxx_concurrence",
    "xxx_concurrence_asymptotic",
    "xxx_genfun_member",
    "xxx_genfun_symmetric",
    "xxx_norm_sq",
    "xxx_norm_sq_closed_form",
    "xy_params",
    "xxx_params",
]
