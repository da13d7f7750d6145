"""Closed-form Cauchy MLE for samples of size three and four."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .model import SampleError, SampleLike, SymmetricPolys, UpperHalfPoint, as_sample
from .numerics import RationalPoly

__all__ = [
    "QuadraticFactor",
    "fit_n3",
    "fit_n4",
    "closed_form_exact",
    "r3_polynomial",
    "r4_polynomial",
    "r4_factors",
]


@dataclass(frozen=True)
class QuadraticFactor:
    """``a z**2 + b z + c``."""

    a: object
    b: object
    c: object

    @property
    def discriminant(self):
        return self.b * self.b - 4 * self.a * self.c

    def poly(self) -> RationalPoly:
        return RationalPoly((self.c, self.b, self.a))

    def upper_root(self) -> complex:
        """The root with positive imaginary part (needs a negative discriminant)."""
        disc = self.discriminant
        if not disc < 0:
            raise ValueError("quadratic has no root in the upper half-plane")
        a, b = float(self.a), float(self.b)
        re = -b / (2 * a)
        im = math.sqrt(-float(disc)) / (2 * abs(a))
        return complex(re, im)


def _distinct_sorted(sample: SampleLike, n: int):
    s = as_sample(sample)
    if s.n != n:
        raise SampleError(f"closed form needs exactly {n} observations, got {s.n}")
    if s.has_duplicates:
        raise SampleError("closed form needs distinct observations")
    return s


def _n3_parts(x1, x2, x3):
    # Returns (mu, sigma**2) with x = (x1, x2, x3) centred on x2.
    num = (x1 + x2) * (x2 + x3) * (x3 + x1) - 8 * x1 * x2 * x3
    den = 2 * (x1 * x1 + x2 * x2 + x3 * x3 - x1 * x2 - x2 * x3 - x3 * x1)
    vandermonde = (x2 - x1) * (x3 - x1) * (x3 - x2)
    return num / den, 3 * vandermonde * vandermonde / (den * den)


def _n4_parts(x1, x2, x3, x4):
    span = x4 - x3 + x2 - x1
    assert span > 0
    mu = (x2 * x4 - x1 * x3) / span
    sigma_sq = (x4 - x3) * (x3 - x2) * (x4 - x1) * (x2 - x1) / (span * span)
    return mu, sigma_sq


def closed_form_exact(sample: SampleLike) -> tuple[Fraction, Fraction]:
    """Exact ``(mu_hat, sigma_hat**2)`` for ``n`` in {3, 4}."""
    s = as_sample(sample)
    if s.exact_values is None:
        raise SampleError("exact values are required")
    x = s.exact_values
    if s.n == 3:
        _distinct_sorted(s, 3)
        c = x[1]
        mu, sig2 = _n3_parts(*(v - c for v in x))
        return mu + c, sig2
    if s.n == 4:
        _distinct_sorted(s, 4)
        return _n4_parts(*x)
    raise SampleError(f"no closed form for n = {s.n}")


def fit_n3(sample: SampleLike) -> UpperHalfPoint:
    """MLE of a three-point sample.

    Evaluated exactly (then rounded) when the sample carries exact values,
    otherwise in floats after centring on the middle observation.
    """
    s = _distinct_sorted(sample, 3)
    if s.exact_values is not None:
        mu, sig2 = closed_form_exact(s)
        return UpperHalfPoint(float(mu), math.sqrt(sig2))
    c = s.values[1]
    mu, sig2 = _n3_parts(*(v - c for v in s.values))
    return UpperHalfPoint(mu + c, math.sqrt(sig2))


def fit_n4(sample: SampleLike) -> UpperHalfPoint:
    """MLE of a four-point sample from the ordered-sample formula."""
    s = _distinct_sorted(sample, 4)
    if s.exact_values is not None:
        mu, sig2 = closed_form_exact(s)
        return UpperHalfPoint(float(mu), math.sqrt(sig2))
    c = 0.5 * (s.values[0] + s.values[3])
    mu, sig2 = _n4_parts(*(v - c for v in s.values))
    return UpperHalfPoint(mu + c, math.sqrt(sig2))


def r3_polynomial(sample: SampleLike) -> RationalPoly:
    """``(3 s2 - s1**2) z**2 + (s1 s2 - 9 s3) z + 3 s1 s3 - s2**2``."""
    _, s1, s2, s3 = SymmetricPolys.of(_distinct_sorted(sample, 3)).s
    return RationalPoly((3 * s1 * s3 - s2 * s2, s1 * s2 - 9 * s3, 3 * s2 - s1 * s1))


def r4_polynomial(sample: SampleLike) -> RationalPoly:
    """The sextic whose roots include the MLE of a four-point sample, in symmetric-function form."""
    _, s1, s2, s3, s4 = SymmetricPolys.of(_distinct_sorted(sample, 4)).s
    return RationalPoly(
        (
            -8 * s1 * s4**2 + 4 * s2 * s3 * s4 - s3**3,
            32 * s4**2 + 4 * s1 * s3 * s4 - 8 * s2**2 * s4 + 2 * s2 * s3**2,
            -40 * s3 * s4 + 20 * s1 * s2 * s4 - 5 * s1 * s3**2,
            -20 * s1**2 * s4 + 20 * s3**2,
            40 * s1 * s4 - 20 * s2 * s3 + 5 * s1**2 * s3,
            -32 * s4 - 4 * s1 * s3 + 8 * s2**2 - 2 * s1**2 * s2,
            8 * s3 - 4 * s1 * s2 + s1**3,
        )
    )


def r4_factors(sample: SampleLike) -> tuple[QuadraticFactor, QuadraticFactor, QuadraticFactor]:
    """The three quadratic factors of the sextic for an ordered four-point sample.

    The middle factor has negative discriminant and carries the MLE as its
    upper root; the outer two have positive discriminants.
    """
    s = _distinct_sorted(sample, 4)
    x1, x2, x3, x4 = s.exact_values if s.exact_values is not None else s.values
    f1 = QuadraticFactor(
        x1 - x2 - x3 + x4,
        -2 * (x1 * x4 - x2 * x3),
        -x1 * x2 * x3 + x1 * x2 * x4 + x1 * x3 * x4 - x2 * x3 * x4,
    )
    f2 = QuadraticFactor(
        x1 - x2 + x3 - x4,
        -2 * (x1 * x3 - x2 * x4),
        x1 * x2 * x3 - x1 * x2 * x4 + x1 * x3 * x4 - x2 * x3 * x4,
    )
    f3 = QuadraticFactor(
        x1 + x2 - x3 - x4,
        -2 * (x1 * x2 - x3 * x4),
        x1 * x2 * x3 + x1 * x2 * x4 - x1 * x3 * x4 - x2 * x3 * x4,
    )
    return f1, f2, f3
