"""Exact polynomial characterisation of the MLE and root extraction.

Writing ``q = U/V`` with integer-coefficient ``U, V`` of degree ``n - 1``,
the fixed-point equation ``z = Q(z)`` becomes ``z B(z) - A(z) = 0`` where
``A/B = (U/V) o (U/V)``.  After removing the common factor with ``B`` and
the trivial roots ``x_1, ..., x_n`` (the factor ``h``), what remains is a
polynomial ``R_n`` of degree at most ``n**2 - 3n + 2`` whose only root in
the upper half-plane is the MLE.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np

from .model import SampleError, SampleLike, UpperHalfPoint, as_sample, build_h
from .numerics import RationalPoly, RootFindingError, aberth_roots, compose_rational, poly_gcd

__all__ = [
    "AlgebraicFitError",
    "RnConstruction",
    "AlgebraicFit",
    "q_numerator_denominator",
    "construct_Rn",
    "build_Rn",
    "fit_algebraic",
    "polish_root",
    "emit_coefficients",
    "parse_coefficients",
]


class AlgebraicFitError(ArithmeticError):
    """No root of ``R_n`` in the upper half-plane solves the likelihood equation."""


@dataclass(frozen=True)
class RnConstruction:
    """Every stage of the ``R_n`` pipeline, kept for inspection and testing."""

    U: RationalPoly
    V: RationalPoly
    A: RationalPoly
    B: RationalPoly
    N: RationalPoly
    common: RationalPoly
    P: RationalPoly
    h: RationalPoly
    R: RationalPoly


def q_numerator_denominator(sample: SampleLike) -> tuple[RationalPoly, RationalPoly]:
    """``U = sum_j x_j prod_{k != j} (x_k - z)`` and ``V = sum_j prod_{k != j} (x_k - z) = -h'``."""
    s = as_sample(sample)
    if s.exact_values is None:
        raise SampleError("exact values are required")
    h, _ = build_h(s)
    U = RationalPoly()
    V = RationalPoly()
    for x in s.exact_values:
        cofactor = h.exact_div(RationalPoly((x, -1)))
        U = U + cofactor * x
        V = V + cofactor
    return U, V


def construct_Rn(sample: SampleLike) -> RnConstruction:
    """Run the full exact pipeline and return every intermediate polynomial.

    Raises :class:`ArithmeticError` if either exact division leaves a
    remainder; that would mean a broken construction, not a hard sample.
    """
    s = as_sample(sample)
    U, V = q_numerator_denominator(s)
    # A common scalar leaves q = U/V unchanged; clearing it keeps integers small.
    joint = RationalPoly(U.coeffs + V.coeffs).content()
    U, V = U * (1 / joint), V * (1 / joint)
    A, B = compose_rational(U, V, U, V)
    N = RationalPoly.x() * B - A
    common = poly_gcd(N, B)
    P = N.exact_div(common)
    h, _ = build_h(s)
    R = P.exact_div(h).primitive()
    return RnConstruction(U, V, A, B, N, common, P, h, R)


def build_Rn(sample: SampleLike) -> RationalPoly:
    """``R_n`` as a primitive integer polynomial with positive leading coefficient."""
    return construct_Rn(sample).R


@dataclass(frozen=True)
class AlgebraicFit:
    """Result of :func:`fit_algebraic`."""

    Rn: RationalPoly
    degree: int
    roots: np.ndarray
    chosen: UpperHalfPoint
    residual: float


def _mobius_residual(y: np.ndarray, w: complex) -> float:
    return float(abs(np.mean((y - w) / (y - w.conjugate()))))


_PRECISION_LADDER = (None, 40, 80, 160, 320)


def _select_root(R: RationalPoly, c, r, big, y, tol, root_tol, precision):
    """Roots of ``R`` (as points ``w`` of the normalised sample frame) scored by residual."""
    if precision is None:
        shifted = R.taylor_shift(c, r)
        w_roots = aberth_roots(shifted.to_complex(normalize=True), tol=root_tol)
    else:
        # Pure scaling keeps roots of very different sizes apart; shifting to
        # the sample midpoint can pack them into tight clusters.
        scaled = R.taylor_shift(0, big)
        z = float(big) * aberth_roots(scaled, precision=precision)
        w_roots = (z - float(c)) / float(r)
        shifted = None
    upper = [w for w in w_roots if w.imag > 0]
    scored = sorted((_mobius_residual(y, w), i, w) for i, w in enumerate(upper))
    close = [item for item in scored if item[0] <= tol]
    if len(close) > 1:
        # Several candidates pass: sharpen them by Newton on R_n and rescore.
        if shifted is None:
            shifted = R.taylor_shift(c, r)
        poly = shifted.to_complex(normalize=True)
        dpoly = poly.derivative()
        refined = []
        for _, i, w in close:
            for _ in range(5):
                d = complex(dpoly(w))
                if d == 0:
                    break
                w = complex(w - complex(poly(w)) / d)
            refined.append((_mobius_residual(y, w), i, w))
        scored = sorted(refined) + scored[len(close):]
    return w_roots, scored


def polish_root(R: RationalPoly, z: complex, digits: int = 60, steps: int = 8) -> complex:
    """Newton steps on the exact coefficients of ``R`` carried out with ``digits`` digits."""
    with mpmath.workdps(digits):
        coeffs = [mpmath.mpf(c.numerator) / c.denominator for c in reversed(R.coeffs)]
        w = mpmath.mpc(z)
        best, best_abs = w, abs(mpmath.polyval(coeffs, w))
        for _ in range(steps):
            p, dp = mpmath.polyval(coeffs, w, derivative=True)
            if dp == 0:
                break
            w = w - p / dp
            a = abs(mpmath.polyval(coeffs, w))
            if a < best_abs:
                best, best_abs = w, a
            if a == 0:
                break
        return complex(best)


def fit_algebraic(
    sample: SampleLike,
    tol: float = 1e-8,
    root_tol: float = 1e-13,
    precision: int | None = None,
) -> AlgebraicFit:
    """MLE as the root of ``R_n`` in the upper half-plane solving the likelihood equation.

    Parameters
    ----------
    sample : Sample or sequence
        Data; float-only samples are converted to exact rationals first.
    tol : float
        Acceptance bound on ``|mean Mob_z(x_j)|`` at the selected root.
    root_tol : float
        Relative tolerance passed to the double-precision Aberth solver.
    precision : int, optional
        Force extended-precision root-finding with this many digits.  By
        default double precision is tried first and the precision is raised
        (40, 80, 160, 320 digits) until a root passes the residual test.

    Notes
    -----
    Roots are computed for ``R_n(c + r w)`` with ``c`` and ``r`` the midpoint
    and half-width of the sample, so the root of interest lies in the closed
    unit half-disc.  The candidate chosen is the upper-half-plane root with
    the smallest likelihood-equation residual, not the one with the largest
    imaginary part.
    """
    s = as_sample(sample)
    if s.exact_values is None:
        s = as_sample(s.values)
    R = build_Rn(s)
    if R.degree < 1:
        raise AlgebraicFitError("R_n is constant; the sample is degenerate")
    lo, hi = s.exact_values[0], s.exact_values[-1]
    c = (lo + hi) / 2
    r = (hi - lo) / 2
    big = max(abs(lo), abs(hi))
    y = np.array([float((x - c) / r) for x in s.exact_values])

    ladder = (precision,) if precision is not None else _PRECISION_LADDER
    best = None
    for prec in ladder:
        try:
            w_roots, scored = _select_root(R, c, r, big, y, tol, root_tol, prec)
        except RootFindingError:
            continue
        if scored and scored[0][0] <= tol:
            best = (w_roots, scored[0])
            break
        if scored and (best is None or scored[0][0] < best[1][0]):
            best = (w_roots, scored[0])
    if best is None:
        raise AlgebraicFitError("R_n has no root in the upper half-plane")
    w_roots, (best_res, _, best_w) = best
    if best_res > tol:
        raise AlgebraicFitError(
            f"no upper-half-plane root of R_n solves the likelihood equation "
            f"(best residual {best_res:.3g})"
        )
    cf, rf = float(c), float(r)
    z = cf + rf * complex(best_w)
    polished = polish_root(R, z, digits=max(60, 2 * (precision or 0)))
    pres = _mobius_residual(y, complex((polished - cf) / rf))
    if polished.imag > 0 and pres <= best_res:
        z, best_res = polished, pres
    roots = cf + rf * w_roots
    return AlgebraicFit(R, R.degree, roots, UpperHalfPoint.from_complex(z), best_res)


def emit_coefficients(fit: AlgebraicFit | RationalPoly, format: str = "integers") -> str:
    """Primitive integer coefficients of ``R_n``, highest degree first.

    ``"integers"`` gives one space-separated line; ``"json"`` gives an object
    with the degree and the coefficients as decimal strings (they routinely
    exceed 64 bits).
    """
    poly = fit.Rn if isinstance(fit, AlgebraicFit) else fit
    coeffs = poly.integer_coefficients()[::-1]
    if format == "integers":
        return " ".join(str(c) for c in coeffs)
    if format == "json":
        return json.dumps(
            {"degree": len(coeffs) - 1, "order": "descending", "coefficients": [str(c) for c in coeffs]}
        )
    raise ValueError(f"unknown coefficient format {format!r}")


def parse_coefficients(text: str) -> RationalPoly:
    """Inverse of :func:`emit_coefficients` for either format."""
    text = text.strip()
    if text.startswith("{"):
        obj = json.loads(text)
        coeffs = [int(c) for c in obj["coefficients"]]
        if obj.get("order", "descending") != "descending":
            coeffs = coeffs[::-1]
    else:
        coeffs = [int(c) for c in text.split()]
    return RationalPoly(coeffs[::-1])
