"""Bound states of the Coulomb + inverse-square potential in N dimensions.

Thin Python face of the C++ core: closed-form levels, normalized radial
eigenfunctions, the 1/gamma expansion, and the independent finite-difference
eigensolver used for cross-checks.
"""

from ._core import (
    BoundLevel,
    DimensionlessModel,
    QuantumState,
    RadialFunction,
    __version__,
    angular_index,
    bound_energy,
    coulomb_check,
    count_nodes,
    expansion_terms,
    norm_integral,
    normalization,
    normalization_alt,
    ode_residual,
    oracle_levels,
    radial_bound,
)

__all__ = [
    "BoundLevel",
    "DimensionlessModel",
    "QuantumState",
    "RadialFunction",
    "__version__",
    "angular_index",
    "bound_energy",
    "coulomb_check",
    "count_nodes",
    "expansion_terms",
    "norm_integral",
    "normalization",
    "normalization_alt",
    "ode_residual",
    "oracle_levels",
    "radial_bound",
]
