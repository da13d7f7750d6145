"""Solver selection, chaining and the serialisable fit report."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .algebraic import AlgebraicFitError, fit_algebraic
from .closedform import fit_n3, fit_n4
from .diagnostics import PositionReport, relative_position
from .iterative import contraction_check, fit_iterative
from .model import SampleError, SampleLike, UpperHalfPoint, as_sample, equation_residuals
from .oracle import newton_raphson_baseline

__all__ = ["METHODS", "FitReport", "fit"]

METHODS = ("auto", "iterate", "closed", "poly", "newton")

# Largest n for which "auto" falls back to the polynomial route.
_POLY_FALLBACK_MAX_N = 12


@dataclass
class FitReport:
    """Outcome of :func:`fit`.

    ``mu`` and ``sigma`` are None only when no method produced an estimate.
    ``path`` lists every method attempted, in order; ``method`` is the one
    whose estimate is reported.
    """

    mu: float | None
    sigma: float | None
    method: str
    iterations: int
    converged: bool
    residuals: dict = field(default_factory=dict)
    diagnostics: PositionReport | None = None
    warnings: list = field(default_factory=list)
    path: list = field(default_factory=list)
    contraction: float | None = None

    @property
    def theta(self) -> complex | None:
        if self.mu is None:
            return None
        return complex(self.mu, self.sigma)

    def to_dict(self) -> dict:
        diag = None
        if self.diagnostics is not None:
            d = self.diagnostics
            diag = {
                "relative_position": {"re": d.xi.real, "im": d.xi.imag},
                "relative_distance": d.relative_distance,
                "half_circle_satisfied": d.half_circle_satisfied,
                "cdf_residuals": list(d.cdf_residuals),
                "contraction": self.contraction,
            }
        return {
            "mu": self.mu,
            "sigma": self.sigma,
            "method": self.method,
            "iterations": self.iterations,
            "converged": self.converged,
            "residuals": dict(self.residuals),
            "diagnostics": diag,
            "warnings": list(self.warnings),
            "path": list(self.path),
        }


def _finish(s, est: UpperHalfPoint | None, method, iterations, tol, warnings, path, converged=True):
    if est is None:
        return FitReport(None, None, method, iterations, False, {}, None, warnings, path)
    res = equation_residuals(s, est.theta)
    ok = converged and res["eq28"] <= tol
    if converged and not ok:
        warnings.append(f"{method}: residual eq28 = {res['eq28']:.3g} exceeds tol")
    return FitReport(
        est.mu,
        est.sigma,
        method,
        iterations,
        ok,
        res,
        relative_position(s, est.theta),
        warnings,
        path,
        contraction_check(s, est.theta),
    )


def _iterate(s, start, tol, max_iter, warnings):
    est, trace = fit_iterative(s, start=start, tol=tol, max_iter=max_iter)
    warnings.extend(trace.warnings)
    used = trace.iterations
    if not trace.converged:
        return est, used, False
    # The gap rule can stop a slow orbit short of the residual bound; keep going
    # while the residual still falls.
    res = equation_residuals(s, est.theta)["eq28"]
    while res > tol and used < max_iter:
        chunk = min(max(1000, used), max_iter - used)
        nxt, tr = fit_iterative(s, start=est, tol=0.0, max_iter=chunk)
        used += tr.iterations
        new_res = equation_residuals(s, nxt.theta)["eq28"]
        if new_res >= res:
            break
        est, res = nxt, new_res
        if tr.converged:
            break
    return est, used, True


def _closed(s):
    return fit_n3(s) if s.n == 3 else fit_n4(s)


def fit(
    sample: SampleLike,
    method: str = "auto",
    tol: float = 1e-12,
    max_iter: int = 10**6,
    start: UpperHalfPoint | complex | None = None,
) -> FitReport:
    """Fit the Cauchy MLE with the requested method.

    ``auto`` uses the closed form for three or four distinct observations,
    otherwise the fixed-point iteration, falling back to the polynomial
    route for ``n <= 12`` when the iteration does not converge.  A fit is
    ``converged`` only if its ``eq28`` residual is at most ``tol``.

    Raises
    ------
    SampleError
        Unusable data, or ``method="closed"`` with ``n`` outside {3, 4}.
    ValueError
        Unknown method or non-positive ``tol`` / ``max_iter``.
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")
    if not (tol > 0 and math.isfinite(tol)):
        raise ValueError("tol must be positive")
    if max_iter < 1:
        raise ValueError("max_iter must be positive")
    s = as_sample(sample)
    warnings: list = []
    path: list = []

    if method == "closed" or (method == "auto" and s.n in (3, 4) and not s.has_duplicates):
        if s.n not in (3, 4):
            raise SampleError(f"closed form needs n = 3 or 4, got n = {s.n}")
        path.append("closed")
        return _finish(s, _closed(s), "closed", 0, tol, warnings, path)

    if method == "newton":
        path.append("newton")
        nr = newton_raphson_baseline(s, start=start, max_iter=min(max_iter, 10**4), tol=tol)
        if not nr.converged:
            warnings.append(f"newton: {nr.reason} after {nr.iterations} iterations")
        return _finish(s, nr.estimate, "newton", nr.iterations, tol, warnings, path)

    if method == "poly":
        return _poly(s, tol, warnings, path)

    path.append("iterate")
    est, used, converged = _iterate(s, start, tol, max_iter, warnings)
    report = _finish(s, est, "iterate", used, tol, warnings, path, converged)
    if report.converged or method == "iterate":
        if not converged:
            warnings.append(f"iterate: gap above tol after {used} iterations")
        return report
    warnings.append(f"iterate: not converged after {used} iterations")
    if s.n > _POLY_FALLBACK_MAX_N:
        return report
    fallback = _poly(s, tol, warnings, path)
    if fallback.mu is None:
        return report
    fallback.iterations = used
    return fallback


def _poly(s, tol, warnings, path):
    path.append("poly")
    try:
        af = fit_algebraic(s, tol=max(tol, 1e-8))
    except AlgebraicFitError as exc:
        warnings.append(f"poly: {exc}")
        return FitReport(None, None, "poly", 0, False, {}, None, warnings, path)
    return _finish(s, af.chosen, "poly", 0, tol, warnings, path)
