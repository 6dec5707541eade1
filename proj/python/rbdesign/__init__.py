"""Resolvable block designs for 36 varieties in blocks of six."""

from ._core import (
    Design,
    DisconnectedError,
    ParseError,
    ShapeError,
    ValidationError,
    a_value,
    a_value_float,
    are_isomorphic,
    automorphism_order,
    catalog_design,
    catalog_names,
    concurrence_equivalent,
    delta,
    efficiency_factors,
    gamma,
    is_sylvester_design,
    read_design,
    robustness,
    roy_residual,
    same_spectrum,
    search,
    sylvester_checks,
)

__all__ = [
    "Design",
    "DisconnectedError",
    "ParseError",
    "ShapeError",
    "ValidationError",
    "a_value",
    "a_value_float",
    "are_isomorphic",
    "automorphism_order",
    "catalog_design",
    "catalog_names",
    "concurrence_equivalent",
    "delta",
    "efficiency_factors",
    "gamma",
    "is_sylvester_design",
    "read_design",
    "robustness",
    "roy_residual",
    "same_spectrum",
    "search",
    "sylvester_checks",
]
