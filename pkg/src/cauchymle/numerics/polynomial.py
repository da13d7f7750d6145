"""Dense univariate polynomials over the rationals and over complex floats.

Coefficients are stored lowest degree first; ``coeffs[k]`` multiplies
``x**k``.  The zero polynomial has an empty coefficient tuple.

The heavy lifting (products, pseudo-remainders, GCDs) is done on lists of
Python integers after clearing denominators, which keeps big-rational
normalisation out of the inner loops.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from numbers import Number, Rational
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "BigRational",
    "RationalPoly",
    "ComplexPoly",
    "poly_arith",
    "poly_gcd",
    "compose_rational",
]

BigRational = Fraction


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, float):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def _strip(coeffs: list) -> list:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


# --- integer polynomial kernels (ascending lists of int) -------------------


def _imul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _strip(out)


def _iadd(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, bi in enumerate(b):
        out[i] += bi
    return _strip(out)


def _icontent(a: Sequence[int]) -> int:
    return reduce(gcd, a, 0)


def _iprimitive(a: Sequence[int]) -> list[int]:
    c = _icontent(a)
    if c == 0:
        return []
    if a[-1] < 0:
        c = -c
    return [x // c for x in a]


def _iprem(f: Sequence[int], g: Sequence[int]) -> list[int]:
    """Pseudo-remainder lc(g)**(deg f - deg g + 1) * f mod g."""
    dg = len(g) - 1
    lg = g[-1]
    r = list(f)
    e = len(f) - len(g) + 1
    while r and len(r) - 1 >= dg:
        lr = r[-1]
        shift = len(r) - 1 - dg
        r = [c * lg for c in r]
        for i, gi in enumerate(g):
            r[shift + i] -= lr * gi
        _strip(r)
        e -= 1
    if e > 0:
        m = lg**e
        r = [c * m for c in r]
    return r


def _subresultant_gcd(f: Sequence[int], g: Sequence[int]) -> list[int]:
    """Primitive GCD of two integer polynomials via the subresultant PRS."""
    if len(f) < len(g):
        f, g = g, f
    if not g:
        return _iprimitive(f)
    f, g = _iprimitive(f), _iprimitive(g)
    lead, h = 1, 1
    while True:
        delta = len(f) - len(g)
        r = _iprem(f, g)
        if not r:
            return _iprimitive(g)
        if len(r) == 1:
            return [1]
        divisor = lead * h**delta
        f, g = g, [c // divisor for c in r]
        lead = f[-1]
        if delta:
            h = lead**delta // h ** (delta - 1)


# Mersenne primes used for the modular coprimality certificate.
_CERT_PRIMES = (2**61 - 1, 2**89 - 1, 2**107 - 1, 2**127 - 1)


def _gcd_degree_mod(f: Sequence[int], g: Sequence[int], p: int) -> int:
    """Degree of gcd(f, g) over GF(p); both inputs must have nonzero leading terms mod p."""
    a = [c % p for c in f]
    b = [c % p for c in g]
    _strip(a)
    _strip(b)
    while b:
        inv = pow(b[-1], -1, p)
        db = len(b) - 1
        while a and len(a) - 1 >= db:
            factor = a[-1] * inv % p
            shift = len(a) - 1 - db
            for i, bi in enumerate(b):
                a[shift + i] = (a[shift + i] - factor * bi) % p
            _strip(a)
        a, b = b, a
    return len(a) - 1


def _certified_coprime(f: Sequence[int], g: Sequence[int]) -> bool:
    """True only if ``f`` and ``g`` provably share no non-constant factor over Q.

    A prime not dividing either leading coefficient can only raise the
    degree of the GCD, so a constant GCD modulo such a prime is a proof.
    """
    if len(f) < 2 or len(g) < 2:
        return False
    for p in _CERT_PRIMES:
        if f[-1] % p == 0 or g[-1] % p == 0:
            continue
        if _gcd_degree_mod(f, g, p) == 0:
            return True
    return False


class RationalPoly:
    """Immutable polynomial with exact :class:`fractions.Fraction` coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = _strip([_as_fraction(x) for x in coeffs])
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("RationalPoly is immutable")

    # construction helpers

    @classmethod
    def x(cls) -> "RationalPoly":
        return cls((0, 1))

    @classmethod
    def constant(cls, c) -> "RationalPoly":
        return cls((c,))

    @classmethod
    def from_roots(cls, roots: Iterable, leading=1) -> "RationalPoly":
        """Return ``leading * prod(x - r)``."""
        p = cls.constant(leading)
        for r in roots:
            p = p * cls((-_as_fraction(r), 1))
        return p

    @classmethod
    def _from_ints(cls, ints: Sequence[int], denom: int = 1) -> "RationalPoly":
        if denom == 1:
            return cls(Fraction(c) for c in ints)
        return cls(Fraction(c, denom) for c in ints)

    # basic properties

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __eq__(self, other):
        if isinstance(other, RationalPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == RationalPoly.constant(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"RationalPoly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and c in (1, -1):
                coef = "" if c == 1 else "-"
            else:
                coef = str(c) if c > 0 or not terms else f"({c})"
            terms.append(f"{coef}{'*' if mono and coef not in ('', '-') else ''}{mono}")
        return " + ".join(terms)

    # arithmetic

    def __neg__(self):
        return RationalPoly(-c for c in self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, bi in enumerate(b):
            out[i] += bi
        return RationalPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalPoly(c * other for c in self.coeffs)
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return RationalPoly()
        da, ia = self.to_integers()
        db, ib = other.to_integers()
        return RationalPoly._from_ints(_imul(ia, ib), da * db)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative polynomial power")
        out = RationalPoly.constant(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __divmod__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by the zero polynomial")
        rem = list(self.coeffs)
        db = other.degree
        lb = other.leading
        quot = [Fraction(0)] * max(len(rem) - db, 0)
        while rem and len(rem) - 1 >= db:
            k = len(rem) - 1 - db
            c = rem[-1] / lb
            quot[k] = c
            for i, bi in enumerate(other.coeffs):
                rem[k + i] -= c * bi
            rem.pop()
            _strip(rem)
        return RationalPoly(quot), RationalPoly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "RationalPoly":
        """Divide, raising :class:`ArithmeticError` on a nonzero remainder."""
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("polynomial division left a nonzero remainder")
        return q

    # evaluation and calculus

    def __call__(self, value):
        """Horner evaluation; exact for rationals, floating for float/complex."""
        if isinstance(value, (float, complex, np.floating, np.complexfloating)):
            acc = 0.0 * value
            for c in reversed(self.coeffs):
                acc = acc * value + float(c)
            return acc
        value = _as_fraction(value)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def derivative(self) -> "RationalPoly":
        return RationalPoly(k * c for k, c in enumerate(self.coeffs) if k)

    def taylor_shift(self, center, scale=1) -> "RationalPoly":
        """Return the polynomial ``w -> p(center + scale * w)``."""
        lin = RationalPoly((center, scale))
        out = RationalPoly()
        for c in reversed(self.coeffs):
            out = out * lin + RationalPoly.constant(c)
        return out

    # normalisation

    def to_integers(self) -> tuple[int, list[int]]:
        """Return ``(d, ints)`` with ``self == ints / d`` and ``d > 0``."""
        d = lcm(*(c.denominator for c in self.coeffs)) if self.coeffs else 1
        return d, [c.numerator * (d // c.denominator) for c in self.coeffs]

    def content(self) -> Fraction:
        """Positive rational ``c`` such that ``self / c`` has coprime integer coefficients."""
        if not self.coeffs:
            return Fraction(0)
        d, ints = self.to_integers()
        return Fraction(_icontent(ints), d)

    def primitive(self) -> "RationalPoly":
        """Integer coefficients with gcd 1 and positive leading coefficient."""
        if not self.coeffs:
            return self
        _, ints = self.to_integers()
        return RationalPoly._from_ints(_iprimitive(ints))

    def monic(self) -> "RationalPoly":
        if not self.coeffs:
            raise ZeroDivisionError("zero polynomial has no monic associate")
        lc = self.leading
        return RationalPoly(c / lc for c in self.coeffs)

    def integer_coefficients(self) -> list[int]:
        """Coefficients of :meth:`primitive` as Python ints, ascending."""
        return [int(c) for c in self.primitive().coeffs]

    def to_complex(self, normalize: bool = False) -> "ComplexPoly":
        """Round to a :class:`ComplexPoly`.

        With ``normalize`` the coefficients are first divided by the largest
        magnitude, so polynomials with huge exact coefficients stay finite.
        """
        if normalize and self.coeffs:
            m = max(abs(c) for c in self.coeffs)
            return ComplexPoly([complex(float(c / m)) for c in self.coeffs])
        return ComplexPoly([complex(float(c)) for c in self.coeffs])


def _coerce(value) -> RationalPoly | None:
    if isinstance(value, RationalPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return RationalPoly.constant(value)
    return None


@dataclass(frozen=True)
class ComplexPoly:
    """Polynomial with complex double coefficients, lowest degree first."""

    coeffs: np.ndarray

    def __init__(self, coeffs):
        c = np.asarray(coeffs, dtype=complex).ravel()
        nz = np.flatnonzero(c)
        c = c[: nz[-1] + 1] if nz.size else c[:0]
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        acc = np.zeros_like(z)
        for c in self.coeffs[::-1]:
            acc = acc * z + c
        return acc

    def derivative(self) -> "ComplexPoly":
        k = np.arange(1, len(self.coeffs))
        return ComplexPoly(self.coeffs[1:] * k)

    def magnitude_scale(self, z):
        """``sum |a_k| |z|**k``, the natural yardstick for ``|p(z)|``."""
        r = np.abs(np.asarray(z, dtype=complex))
        acc = np.zeros_like(r)
        for c in np.abs(self.coeffs[::-1]):
            acc = acc * r + c
        return acc

    def __eq__(self, other):
        if not isinstance(other, ComplexPoly):
            return NotImplemented
        return np.array_equal(self.coeffs, other.coeffs)

    def __hash__(self):
        return hash(self.coeffs.tobytes())


def poly_arith(a: RationalPoly, b: RationalPoly, op: str):
    """Dispatch ``add``, ``sub``, ``mul`` or ``divrem`` on two polynomials."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "divrem":
        return divmod(a, b)
    raise ValueError(f"unknown polynomial operation {op!r}")


def poly_gcd(a: RationalPoly, b: RationalPoly) -> RationalPoly:
    """Monic greatest common divisor over the rationals.

    Coprimality is first certified modulo a few large primes; otherwise the
    subresultant pseudo-remainder sequence runs on the integer images of
    ``a`` and ``b``.
    """
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    _, ia = a.to_integers()
    _, ib = b.to_integers()
    if _certified_coprime(ia, ib):
        return RationalPoly.constant(1)
    g = _subresultant_gcd(ia, ib)
    return RationalPoly._from_ints(g).monic()


def compose_rational(
    numer: RationalPoly,
    denom: RationalPoly,
    arg_numer: RationalPoly,
    arg_denom: RationalPoly,
) -> tuple[RationalPoly, RationalPoly]:
    """Substitute ``arg_numer / arg_denom`` into ``numer / denom``.

    With ``d = max(deg numer, deg denom)`` and ``N, D`` the argument
    polynomials, returns the unreduced pair

        A = sum_k numer_k N**k D**(d - k),   B = sum_k denom_k N**k D**(d - k)

    so that ``A / B`` equals the composed rational function.
    """
    if arg_denom.is_zero():
        raise ZeroDivisionError("argument denominator is the zero polynomial")
    if denom.is_zero():
        raise ZeroDivisionError("outer denominator is the zero polynomial")
    d = max(numer.degree, denom.degree, 0)
    l_out = lcm(*(c.denominator for c in numer.coeffs + denom.coeffs))
    l_arg = lcm(*(c.denominator for c in arg_numer.coeffs + arg_denom.coeffs))
    fn = [int(c * l_out) for c in numer.coeffs]
    fd = [int(c * l_out) for c in denom.coeffs]
    an = [int(c * l_arg) for c in arg_numer.coeffs]
    ad = [int(c * l_arg) for c in arg_denom.coeffs]

    pow_n = [[1]]
    pow_d = [[1]]
    for _ in range(d):
        pow_n.append(_imul(pow_n[-1], an))
        pow_d.append(_imul(pow_d[-1], ad))
    basis = [_imul(pow_n[k], pow_d[d - k]) for k in range(d + 1)]

    def combine(f):
        out: list[int] = []
        for k, fk in enumerate(f):
            if fk:
                out = _iadd(out, [fk * c for c in basis[k]])
        return out

    scale = l_out * l_arg**d
    return (
        RationalPoly._from_ints(combine(fn), scale),
        RationalPoly._from_ints(combine(fd), scale),
    )
