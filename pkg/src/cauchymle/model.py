"""The Cauchy location-scale model in its complex parametrisation.

The parameter is a single point ``theta = mu + i*sigma`` of the upper
half-plane.  Everything here is a pure function of its arguments.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Integral, Rational
from typing import Iterable, Sequence, Union

import numpy as np

from .numerics import ComplexPoly, RationalPoly

__all__ = [
    "SampleError",
    "PoleError",
    "Sample",
    "UpperHalfPoint",
    "SymmetricPolys",
    "as_sample",
    "parse_exact",
    "density",
    "density_complex_form",
    "log_likelihood",
    "cdf",
    "mobius",
    "mobius_inverse",
    "elementary_symmetric",
    "build_h",
    "h_derivative_leibniz",
    "equation_residuals",
]


class SampleError(ValueError):
    """The data cannot serve as a Cauchy sample (too small, degenerate, non-finite)."""


class PoleError(ZeroDivisionError):
    """A rational map was evaluated at one of its poles."""


def parse_exact(value) -> Fraction:
    """Interpret ``value`` as an exact rational.

    Strings may be integers, decimals (``"0.06"`` is 3/50) or ``"p/q"``.
    Floats are read through their shortest decimal representation, so the
    float ``0.06`` also becomes 3/50.
    """
    if isinstance(value, bool):
        raise SampleError("booleans are not observations")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (Integral, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise SampleError(f"cannot parse {value!r} as a number") from exc
    x = float(value)
    if not math.isfinite(x):
        raise SampleError(f"non-finite observation {value!r}")
    return Fraction(repr(x))


@dataclass(frozen=True)
class Sample:
    """A validated, sorted sample of real observations.

    ``exact_values`` carries the observations as fractions whenever they
    were given exactly (always, for data coming through :func:`as_sample`).
    """

    values: tuple[float, ...]
    exact_values: tuple[Fraction, ...] | None = None

    def __post_init__(self):
        vals = tuple(float(v) for v in self.values)
        if not all(math.isfinite(v) for v in vals):
            raise SampleError("observations must be finite")
        if self.exact_values is not None:
            exact = tuple(sorted(self.exact_values))
            if len(exact) != len(vals):
                raise SampleError("exact and float values differ in length")
            vals = tuple(float(v) for v in exact)
            object.__setattr__(self, "exact_values", exact)
        else:
            vals = tuple(sorted(vals))
        object.__setattr__(self, "values", vals)
        if len(vals) < 3:
            raise SampleError(f"need at least 3 observations, got {len(vals)}")
        if self.distinct_count < 3:
            raise SampleError("need at least 3 distinct observations")

    @classmethod
    def from_data(cls, data: Iterable) -> "Sample":
        exact = [parse_exact(v) for v in data]
        return cls(values=tuple(float(v) for v in exact), exact_values=tuple(exact))

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def distinct_count(self) -> int:
        if self.exact_values is not None:
            return len(set(self.exact_values))
        return len(set(self.values))

    @property
    def has_duplicates(self) -> bool:
        return self.distinct_count < self.n

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=float)

    def __len__(self):
        return self.n

    def __iter__(self):
        return iter(self.values)

    def affine(self, scale, shift) -> "Sample":
        """The sample ``scale * x + shift`` (``scale > 0``), exact when possible."""
        if self.exact_values is not None and not isinstance(scale, float) and not isinstance(shift, float):
            a, b = parse_exact(scale), parse_exact(shift)
            return Sample.from_data(a * x + b for x in self.exact_values)
        return Sample(tuple(scale * x + shift for x in self.values))


SampleLike = Union[Sample, Sequence]


def as_sample(data: SampleLike) -> Sample:
    """Return ``data`` as a :class:`Sample`, parsing raw sequences exactly."""
    if isinstance(data, Sample):
        return data
    return Sample.from_data(data)


@dataclass(frozen=True)
class UpperHalfPoint:
    """``theta = mu + i*sigma`` with ``sigma > 0``."""

    mu: float
    sigma: float

    def __post_init__(self):
        object.__setattr__(self, "mu", float(self.mu))
        object.__setattr__(self, "sigma", float(self.sigma))
        if not (self.sigma > 0 and math.isfinite(self.sigma) and math.isfinite(self.mu)):
            raise ValueError(f"not a point of the upper half-plane: {self.mu}+{self.sigma}i")

    @classmethod
    def from_complex(cls, z) -> "UpperHalfPoint":
        z = complex(z)
        return cls(z.real, z.imag)

    @property
    def theta(self) -> complex:
        return complex(self.mu, self.sigma)

    @property
    def theta_bar(self) -> complex:
        return complex(self.mu, -self.sigma)

    def __complex__(self):
        return self.theta


def _theta(theta) -> complex:
    t = complex(theta)
    if not t.imag > 0:
        raise ValueError(f"theta must lie in the upper half-plane, got {t}")
    return t


def density(x, theta):
    """Cauchy density ``(sigma/pi) / ((x - mu)**2 + sigma**2)``."""
    t = _theta(theta)
    x = np.asarray(x, dtype=float)
    out = (t.imag / math.pi) / ((x - t.real) ** 2 + t.imag**2)
    return out if out.ndim else float(out)


def density_complex_form(x, theta):
    """The same density written as ``(1/2 pi i) (1/(x - theta) - 1/(x - conj theta))``."""
    t = _theta(theta)
    x = np.asarray(x, dtype=float)
    out = ((1.0 / (x - t) - 1.0 / (x - t.conjugate())) / (2j * math.pi)).real
    return out if out.ndim else float(out)


def log_likelihood(sample: SampleLike, theta) -> float:
    """Sum of log densities of the sample at ``theta``."""
    s = as_sample(sample)
    t = _theta(theta)
    x = s.array
    return float(np.sum(np.log(t.imag / math.pi) - np.log((x - t.real) ** 2 + t.imag**2)))


def cdf(x, theta):
    """Cauchy distribution function ``1/2 + arctan((x - mu)/sigma)/pi``."""
    t = _theta(theta)
    x = np.asarray(x, dtype=float)
    out = 0.5 + np.arctan((x - t.real) / t.imag) / math.pi
    return out if out.ndim else float(out)


def mobius(theta, zeta):
    """``(zeta - theta) / (zeta - conj(theta))``: upper half-plane onto the unit disc."""
    t = complex(theta)
    if isinstance(zeta, np.ndarray):
        return (zeta - t) / (zeta - t.conjugate())
    zeta = complex(zeta)
    den = zeta - t.conjugate()
    if den == 0:
        raise PoleError("Mobius map evaluated at conj(theta)")
    return (zeta - t) / den


def mobius_inverse(theta, w):
    """Inverse Mobius map ``(theta - conj(theta) w) / (1 - w)``."""
    t = complex(theta)
    if isinstance(w, np.ndarray):
        return (t - t.conjugate() * w) / (1 - w)
    w = complex(w)
    if w == 1:
        raise PoleError("inverse Mobius map evaluated at w = 1")
    return (t - t.conjugate() * w) / (1 - w)


def elementary_symmetric(values: Sequence) -> list:
    """``[s_0, ..., s_n]`` for the given values, one root at a time.

    Works for floats and fractions alike; ``s_0 = 1``.
    """
    e = [1]
    for v in values:
        e = [a + v * b for a, b in zip(e + [0], [0] + e)]
    return e


@dataclass(frozen=True)
class SymmetricPolys:
    """Elementary symmetric polynomials ``s_0..s_n`` of a sample."""

    s: tuple

    @classmethod
    def of(cls, sample: SampleLike, exact: bool = True) -> "SymmetricPolys":
        smp = as_sample(sample)
        vals = smp.exact_values if exact and smp.exact_values is not None else smp.values
        return cls(tuple(elementary_symmetric(vals)))

    def h(self) -> RationalPoly:
        """``h(theta) = sum_j s_{n-j} (-theta)**j``."""
        n = len(self.s) - 1
        return RationalPoly(self.s[n - j] * (-1) ** j for j in range(n + 1))


def build_h(sample: SampleLike) -> tuple[RationalPoly, ComplexPoly]:
    """``h(theta) = prod_j (x_j - theta)``, exactly and in complex floats."""
    s = as_sample(sample)
    if s.exact_values is None:
        raise SampleError("exact values are required for the exact path")
    exact = RationalPoly.from_roots(s.exact_values, leading=(-1) ** s.n)
    fl = np.array([1.0 + 0j])
    for x in s.values:
        fl = np.convolve(fl, np.array([x, -1.0], dtype=complex))
    return exact, ComplexPoly(fl)


def h_derivative_leibniz(sample: SampleLike) -> RationalPoly:
    """``h'(theta) = -sum_j prod_{i != j} (x_i - theta)``."""
    s = as_sample(sample)
    xs = s.exact_values
    total = RationalPoly()
    for j in range(s.n):
        total = total + RationalPoly.from_roots(
            (xs[i] for i in range(s.n) if i != j), leading=(-1) ** (s.n - 1)
        )
    return -total


def equation_residuals(sample: SampleLike, theta) -> dict:
    """Dimensionless residuals of the equivalent likelihood equations at ``theta``.

    ``eq24``
        ``|1 + (theta - conj theta)/n * sum 1/(x_j - theta)|``, i.e.
        ``n h - (theta - conj theta) h'`` divided by ``n h``.
    ``eq28``
        ``|mean_j Mob_theta(x_j)|``.
    ``eq29mu``, ``eq29sigma``
        The two real score equations, ``(sigma/n) sum (x_j - mu)/D_j`` and
        ``(1/n) sum sigma**2/D_j - 1/2`` with ``D_j = (x_j - mu)**2 + sigma**2``.
    """
    s = as_sample(sample)
    t = _theta(theta)
    x = s.array
    n = s.n
    r = 1.0 / (x - t)
    d = (x - t.real) ** 2 + t.imag**2
    return {
        "eq24": float(abs(1 + (t - t.conjugate()) / n * r.sum())),
        "eq28": float(abs(np.mean((x - t) / (x - t.conjugate())))),
        "eq29mu": float(abs(t.imag / n * np.sum((x - t.real) / d))),
        "eq29sigma": float(abs(np.sum(t.imag**2 / d) / n - 0.5)),
    }
