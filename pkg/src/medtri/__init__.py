"""Exact search and audit tooling for triangles with integer sides and medians."""

from medtri.errors import AuditFailure, DomainError, UnsupportedInputError
from medtri.exact import isqrt_exact, rat_sqrt_exact, residue3
from medtri.triangle import (
    AreaClass,
    Classification,
    IntTriangle,
    MedianData,
    RatTriangle,
    area_class,
    classify,
    heron16,
    integer_medians,
    median9,
    median_squares,
    sides_from_medians,
)

__version__ = "0.1.0"

__all__ = [
    "AreaClass",
    "AuditFailure",
    "Classification",
    "DomainError",
    "IntTriangle",
    "MedianData",
    "RatTriangle",
    "UnsupportedInputError",
    "__version__",
    "area_class",
    "classify",
    "heron16",
    "integer_medians",
    "isqrt_exact",
    "median9",
    "median_squares",
    "rat_sqrt_exact",
    "residue3",
    "sides_from_medians",
]
