"""Exact-rational WZW machinery.

Thin wrapper over the C++ core: truncated oscillator/affine modules,
Sugawara operators and Virasoro relation checks, genus-zero conformal
blocks, the KZ connection, fusion coefficients, Verlinde dimensions and
degeneration monodromy. Rationals cross the boundary as ``"p/q"`` strings;
every value is exact.
"""

from ._core import (
    __version__,
    algebra_info,
    block_dimension,
    covariant_dimension,
    degeneration_check,
    derivation_check,
    factorization_check,
    fusion_table,
    irrep_info,
    kz_system,
    module_dims,
    monodromy,
    propagation_check,
    verlinde_dimension,
    virasoro_check,
    weights,
)

__all__ = [
    "__version__",
    "algebra_info",
    "block_dimension",
    "covariant_dimension",
    "degeneration_check",
    "derivation_check",
    "factorization_check",
    "fusion_table",
    "irrep_info",
    "kz_system",
    "module_dims",
    "monodromy",
    "propagation_check",
    "verlinde_dimension",
    "virasoro_check",
    "weights",
]
