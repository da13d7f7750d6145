"""Exact and floating-point polynomial machinery."""

from .polynomial import (
    BigRational,
    ComplexPoly,
    RationalPoly,
    compose_rational,
    poly_arith,
    poly_gcd,
)
from .roots import RootFindingError, aberth_roots

__all__ = [
    "BigRational",
    "ComplexPoly",
    "RationalPoly",
    "RootFindingError",
    "aberth_roots",
    "compose_rational",
    "poly_arith",
    "poly_gcd",
]
