"""Fixed-point iteration for the Cauchy MLE and its circular counterpart.

The map ``q(z) = sum x_j/(x_j - z) / sum 1/(x_j - z)`` sends the upper
half-plane to the lower one, so ``Q = q o q`` maps the upper half-plane
into itself.  The MLE is the unique fixed point of ``Q`` there, and every
orbit of ``Q`` converges to it, contracting the pseudo-hyperbolic distance
``d(a, b) = |a - b| / |a - conj(b)|``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .model import (
    PoleError,
    Sample,
    SampleError,
    SampleLike,
    UpperHalfPoint,
    as_sample,
    mobius,
    mobius_inverse,
)

__all__ = [
    "ConvergenceError",
    "DegenerateSpreadWarning",
    "IterationTrace",
    "CircularSample",
    "CircularFit",
    "pseudo_hyperbolic",
    "q_map",
    "Q_map",
    "q_derivative",
    "starting_point",
    "fit_iterative",
    "contraction_check",
    "q_tilde",
    "Q_tilde",
    "Q_tilde_conjugated",
    "fit_circular",
    "stability_probe",
]

_NUMPY_CUTOFF = 48


class ConvergenceError(ArithmeticError):
    """An iteration exhausted its budget without meeting its tolerance."""


class DegenerateSpreadWarning(UserWarning):
    """The interquartile range vanished; a wider spread was substituted."""


def pseudo_hyperbolic(a: complex, b: complex) -> float:
    """``|a - b| / |a - conj(b)|`` for points of the upper half-plane."""
    a, b = complex(a), complex(b)
    if a == b:
        return 0.0
    return abs(a - b) / abs(a - b.conjugate())


def _q(xs, z: complex) -> complex:
    if len(xs) > _NUMPY_CUTOFF:
        x = np.asarray(xs)
        d = x - z
        if np.any(d == 0):
            raise PoleError(f"q evaluated at a sample point {z}")
        r = 1.0 / d
        den = r.sum()
        if den == 0:
            raise PoleError(f"q has a pole at {z}")
        return complex((x * r).sum() / den)
    num = 0j
    den = 0j
    for x in xs:
        d = x - z
        if d == 0:
            raise PoleError(f"q evaluated at a sample point {z}")
        r = 1.0 / d
        num += x * r
        den += r
    if den == 0:
        raise PoleError(f"q has a pole at {z}")
    return num / den


def q_map(sample: SampleLike, z) -> complex:
    """``q(z) = z - n h(z)/h'(z)`` in its sum-quotient form."""
    return _q(as_sample(sample).values, complex(z))


def Q_map(sample: SampleLike, z) -> complex:
    """``Q(z) = q(q(z))``; maps the upper half-plane into itself."""
    xs = as_sample(sample).values
    return _q(xs, _q(xs, complex(z)))


def q_derivative(sample: SampleLike, z) -> complex:
    """Derivative of ``q`` from the ratio of first and second reciprocal sums."""
    s = as_sample(sample)
    x = s.array
    r = 1.0 / (x - complex(z))
    s1 = r.sum()
    s2 = (r * r).sum()
    return complex((s1 * s1 - s.n * s2) / (s1 * s1))


def _type7_quantile(xs: Sequence, pos):
    """Order statistic at 1-based fractional position ``pos``, linearly interpolated."""
    j = math.floor(pos)
    lo = xs[j - 1]
    if j >= len(xs):
        return lo
    return (j + 1 - pos) * lo + (pos - j) * xs[j]


def _median_iqr(sample: Sample):
    xs = sample.exact_values if sample.exact_values is not None else sample.values
    n = len(xs)
    one = Fraction(1) if sample.exact_values is not None else 1.0
    median = _type7_quantile(xs, one * (n + 1) / 2)
    iqr = _type7_quantile(xs, one * (3 * n + 1) / 4) - _type7_quantile(xs, one * (n + 3) / 4)
    return median, iqr, xs


def starting_point(sample: SampleLike) -> UpperHalfPoint:
    """Median plus ``i`` times the interquartile range.

    Quartiles follow the usual linear interpolation between order statistics
    (positions ``(n+3)/4`` and ``(3n+1)/4``), evaluated exactly when the
    sample carries exact values.  A vanishing IQR is replaced by half the
    sample range, with a :class:`DegenerateSpreadWarning`.
    """
    s = as_sample(sample)
    median, iqr, xs = _median_iqr(s)
    if iqr == 0:
        warnings.warn(
            "interquartile range is zero; using half the sample range",
            DegenerateSpreadWarning,
            stacklevel=2,
        )
        iqr = (xs[-1] - xs[0]) / 2
    return UpperHalfPoint(float(median), float(iqr))


@dataclass
class IterationTrace:
    """Orbit ``z_0, z_1, ...`` of ``Q`` and the gaps between consecutive iterates."""

    iterates: list = field(default_factory=list)
    gaps: list = field(default_factory=list)
    converged: bool = False
    iterations: int = 0
    warnings: list = field(default_factory=list)

    def __getitem__(self, m: int) -> complex:
        """The iterate ``Q^m(z_0)``."""
        return self.iterates[m]

    def snapshot(self, m: int) -> complex:
        """``Q^m(z_0)``, holding the final iterate once the orbit has converged."""
        if m < len(self.iterates):
            return self.iterates[m]
        if self.converged:
            return self.iterates[-1]
        raise IndexError(f"orbit stopped at m = {len(self.iterates) - 1} without converging")

    @property
    def euclidean_gaps(self) -> list:
        it = self.iterates
        return [abs(b - a) for a, b in zip(it, it[1:])]

    def contraction_rate(self, tail: int = 20) -> float:
        """Geometric-mean ratio of successive gaps over the last ``tail`` steps."""
        g = [x for x in self.gaps if x > 0]
        if len(g) < 2:
            return 0.0
        g = g[-(tail + 1):]
        return float(math.exp((math.log(g[-1]) - math.log(g[0])) / (len(g) - 1)))


def _run(xs, z0: complex, tol: float, max_iter: int, trace: IterationTrace):
    z = z0
    trace.iterates.append(z)
    for m in range(1, max_iter + 1):
        w = _q(xs, _q(xs, z))
        if not (math.isfinite(w.real) and math.isfinite(w.imag)) or w.imag <= 0:
            raise PoleError(f"iterate left the upper half-plane at step {m}")
        gap = pseudo_hyperbolic(z, w)
        trace.iterates.append(w)
        trace.gaps.append(gap)
        z = w
        if gap <= tol:
            trace.converged = True
            trace.iterations = m
            return z
    trace.iterations = max_iter
    return z


def fit_iterative(
    sample: SampleLike,
    start: UpperHalfPoint | complex | None = None,
    tol: float = 1e-12,
    max_iter: int = 10**6,
) -> tuple[UpperHalfPoint, IterationTrace]:
    """Iterate ``Q`` from ``start`` until the pseudo-hyperbolic gap is below ``tol``.

    Parameters
    ----------
    sample : Sample or sequence
        The data.
    start : UpperHalfPoint or complex, optional
        Initial point; defaults to :func:`starting_point`.
    tol : float
        Stop once ``d(z_m, z_{m+1}) <= tol``.  With ``tol = 0`` the orbit
        runs until it is stationary in floating point.
    max_iter : int
        Budget of ``Q`` applications.  Running out is not an error: the
        trace then has ``converged = False``.

    Returns
    -------
    estimate, trace : UpperHalfPoint, IterationTrace
    """
    s = as_sample(sample)
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    trace_warnings = []
    if start is None:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            start = starting_point(s)
        trace_warnings = [str(w.message) for w in caught]
    z0 = complex(start)
    if not z0.imag > 0:
        raise ValueError("start must lie in the upper half-plane")
    if s.has_duplicates:
        trace_warnings.append("sample contains repeated values")

    spread = s.values[-1] - s.values[0]
    last_error = None
    for attempt in range(4):
        trace = IterationTrace(warnings=list(trace_warnings))
        try:
            z = _run(s.values, z0, tol, max_iter, trace)
        except PoleError as exc:
            last_error = exc
            z0 = z0 + spread * 1e-7 * (attempt + 1) * complex(1, 1)
            continue
        if attempt:
            trace.warnings.append(f"restarted {attempt} time(s) after hitting a pole")
        return UpperHalfPoint.from_complex(z), trace
    raise PoleError(f"iteration hit a pole after 3 restarts: {last_error}")


def contraction_check(sample: SampleLike, theta_hat) -> float:
    """``|q'(theta_hat)| = |sum ((x_j - conj t)/(x_j - t))**2| / n``; below 1 at the MLE."""
    s = as_sample(sample)
    t = complex(theta_hat)
    ratio = (s.array - t.conjugate()) / (s.array - t)
    return float(abs(np.sum(ratio * ratio)) / s.n)


# --- circular Cauchy ---------------------------------------------------------


@dataclass(frozen=True)
class CircularSample:
    """Angles in ``[0, 2*pi)``, sorted, with at least three distinct values."""

    angles: tuple

    def __post_init__(self):
        a = tuple(sorted(float(x) for x in self.angles))
        if len(a) < 3:
            raise SampleError(f"need at least 3 angles, got {len(a)}")
        if not all(0.0 <= x < 2 * math.pi for x in a):
            raise SampleError("angles must lie in [0, 2*pi)")
        if len(set(a)) < 3:
            raise SampleError("need at least 3 distinct angles")
        object.__setattr__(self, "angles", a)

    @property
    def n(self) -> int:
        return len(self.angles)

    @property
    def points(self) -> np.ndarray:
        return np.exp(1j * np.asarray(self.angles))


@dataclass(frozen=True)
class CircularFit:
    psi: complex
    iterations: int
    converged: bool
    residual: float


def _as_circular(c) -> CircularSample:
    return c if isinstance(c, CircularSample) else CircularSample(tuple(c))


def q_tilde(c, w) -> complex:
    """Circular analogue of ``q``: ``sum e_j/(e_j - w) / sum 1/(e_j - w)``.

    Here ``e_j = exp(i x_j)``. The map sends the open disc to the exterior of
    the closed disc, so ``Q_tilde`` maps the disc into itself and equals
    ``Mob_theta o Q_theta o Mob_theta^{-1}`` for every ``theta`` in H.
    """
    e = _as_circular(c).points
    d = e - complex(w)
    if np.any(d == 0):
        raise PoleError(f"q_tilde evaluated at a pole {w}")
    r = 1.0 / d
    return complex((e * r).sum() / r.sum())


def Q_tilde(c, w) -> complex:
    c = _as_circular(c)
    return q_tilde(c, q_tilde(c, w))


def Q_tilde_conjugated(c, theta, w) -> complex:
    """``Mob_theta o Q_theta o Mob_theta^{-1}(w)`` built from the transported real sample."""
    c = _as_circular(c)
    t = complex(theta)
    y = mobius_inverse(t, c.points)
    z = mobius_inverse(t, complex(w))
    z = _q(list(y), _q(list(y), z))
    return mobius(t, z)


def fit_circular(c, tol: float = 1e-12, max_iter: int = 10**6) -> CircularFit:
    """Circular-Cauchy MLE by iterating ``Q_tilde`` from the disc centre.

    Raises :class:`ConvergenceError` if ``|w_{m+1} - w_m|`` stays above
    ``tol`` for ``max_iter`` steps.
    """
    c = _as_circular(c)
    e = c.points

    def qt(w):
        r = 1.0 / (e - w)
        return complex((e * r).sum() / r.sum())

    w = 0j
    for m in range(1, max_iter + 1):
        nxt = qt(qt(w))
        step = abs(nxt - w)
        w = nxt
        if step <= tol:
            if not abs(w) < 1:
                raise ConvergenceError("circular iteration left the unit disc")
            return CircularFit(w, m, True, abs(w - qt(qt(w))))
    raise ConvergenceError(f"circular iteration did not converge in {max_iter} steps")


def stability_probe(
    sample: SampleLike,
    epsilon: float,
    trials: int = 10,
    seed: int = 0,
    tol: float = 1e-12,
) -> float:
    """Largest move of the MLE over random perturbations of size ``<= epsilon``."""
    s = Sample(as_sample(sample).values)
    base, _ = fit_iterative(s, tol=tol)
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(trials):
        shifted = s.array + rng.uniform(-epsilon, epsilon, size=s.n)
        est, _ = fit_iterative(Sample(tuple(shifted)), tol=tol)
        worst = max(worst, abs(est.theta - base.theta))
    return worst
