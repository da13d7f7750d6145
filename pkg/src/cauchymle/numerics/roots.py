"""Simultaneous polynomial root-finding (Aberth-Ehrlich).

Double precision is the default.  Polynomials whose roots are badly
conditioned in the monomial basis (widely spread magnitudes, near-double
roots) can be solved in extended precision from exact coefficients, with
the same iteration carried out in :mod:`mpmath` arithmetic.
"""

from __future__ import annotations

import mpmath
import numpy as np

from .polynomial import ComplexPoly, RationalPoly

__all__ = ["RootFindingError", "aberth_roots"]

_EPS = np.finfo(float).eps


class RootFindingError(ArithmeticError):
    """Raised when the simultaneous iteration fails to converge."""


def _horner_with_derivative(coeffs: np.ndarray, z: np.ndarray):
    p = np.zeros_like(z)
    dp = np.zeros_like(z)
    for c in coeffs[::-1]:
        dp = dp * z + p
        p = p * z + c
    return p, dp


def aberth_roots(
    p: ComplexPoly | RationalPoly | np.ndarray,
    tol: float = 1e-13,
    max_iter: int = 500,
    polish_steps: int = 3,
    precision: int | None = None,
) -> np.ndarray:
    """Approximate all roots of ``p`` simultaneously.

    Parameters
    ----------
    p : ComplexPoly or array_like
        Polynomial, coefficients lowest degree first.
    tol : float
        Relative tolerance.  Iteration stops once every Aberth correction is
        below ``tol * (1 + |z|)``; each returned root then satisfies
        ``|p(z)| <= tol * sum_k |a_k| |z|**k`` (floored at the rounding level
        of Horner's rule).
    max_iter : int
        Maximum number of sweeps.
    polish_steps : int
        Newton steps applied to every root after the sweeps.
    precision : int, optional
        Work with this many significant decimal digits instead of doubles.
        Sweeps stop once corrections fall below ``10**(8 - precision)`` or
        every root has backward error at the working rounding level.  Exact
        coefficients are used as given when ``p`` is a RationalPoly.

    Returns
    -------
    roots : np.ndarray
        ``deg p`` complex roots, sorted by real then imaginary part.

    Raises
    ------
    RootFindingError
        If the roots do not meet the residual bound after ``max_iter`` sweeps.
    """
    if precision is not None:
        return _aberth_mp(p, precision, max_iter, polish_steps)
    if isinstance(p, RationalPoly):
        p = p.to_complex(normalize=True)
    elif not isinstance(p, ComplexPoly):
        p = ComplexPoly(p)
    coeffs = p.coeffs
    n = p.degree
    if n < 1:
        raise ValueError("need a polynomial of degree >= 1")
    if not np.all(np.isfinite(coeffs)):
        raise ValueError("polynomial coefficients must be finite")

    a = coeffs / coeffs[-1]
    if n == 1:
        return np.array([-a[0]])

    # Cauchy bound: every root lies in |z| <= 1 + max |a_k / a_n|.
    radius = 1.0 + np.max(np.abs(a[:-1]))
    k = np.arange(n)
    z = radius * np.exp(1j * (2 * np.pi * k / n + 0.4 + 0.05 * k / n))

    check_tol = max(tol, 4 * n * _EPS)
    off_diag = ~np.eye(n, dtype=bool)
    for _ in range(max_iter):
        pv, dpv = _horner_with_derivative(a, z)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = np.where(dpv != 0, pv / dpv, pv)
            diff = z[:, None] - z[None, :]
            inv = np.zeros_like(diff)
            inv[off_diag] = 1.0 / diff[off_diag]
            s = inv.sum(axis=1)
            step = ratio / (1.0 - ratio * s)
        step = np.where(np.isfinite(step), step, 0.0)
        z = z - step
        if np.all(np.abs(step) <= tol * (1.0 + np.abs(z))):
            break

    for _ in range(polish_steps):
        pv, dpv = _horner_with_derivative(a, z)
        with np.errstate(divide="ignore", invalid="ignore"):
            cand = z - pv / dpv
        better = np.isfinite(cand)
        if np.any(better):
            pc, _ = _horner_with_derivative(a, cand)
            better &= np.abs(pc) <= np.abs(pv)
        z = np.where(better, cand, z)

    monic = ComplexPoly(a)
    resid = np.abs(monic(z))
    bound = check_tol * monic.magnitude_scale(z)
    if not np.all(resid <= bound):
        worst = float(np.max(resid / bound))
        raise RootFindingError(
            f"Aberth iteration did not converge in {max_iter} sweeps "
            f"(worst residual {worst:.3g} x tolerance)"
        )
    order = np.lexsort((z.imag, z.real))
    return z[order]


def _aberth_mp(p, precision: int, max_iter: int, polish_steps: int) -> np.ndarray:
    with mpmath.workdps(precision):
        if isinstance(p, RationalPoly):
            coeffs = [mpmath.mpf(c.numerator) / c.denominator for c in p.coeffs]
        else:
            c = p.coeffs if isinstance(p, ComplexPoly) else ComplexPoly(p).coeffs
            coeffs = [mpmath.mpc(complex(v)) for v in c]
        n = len(coeffs) - 1
        if n < 1:
            raise ValueError("need a polynomial of degree >= 1")
        lead = coeffs[-1]
        a = [c / lead for c in coeffs]
        if n == 1:
            return np.array([complex(-a[0])])
        tol = mpmath.mpf(10) ** (8 - precision)

        def horner(z):
            pv = mpmath.mpc(0)
            dpv = mpmath.mpc(0)
            for c in reversed(a):
                dpv = dpv * z + pv
                pv = pv * z + c
            return pv, dpv

        radius = 1 + max(abs(c) for c in a[:-1])
        z = [
            radius * mpmath.expj(2 * mpmath.pi * k / n + mpmath.mpf("0.4") + mpmath.mpf("0.05") * k / n)
            for k in range(n)
        ]
        abs_a = [abs(c) for c in a]
        floor = 4 * n * mpmath.mpf(10) ** (-precision)

        def settled(zk):
            r = abs(zk)
            scale = mpmath.mpf(0)
            for c in reversed(abs_a):
                scale = scale * r + c
            return abs(horner(zk)[0]) <= floor * scale

        converged = False
        for _ in range(max_iter):
            biggest = mpmath.mpf(0)
            for k in range(n):
                # Gauss-Seidel sweep: later roots see the updated earlier ones.
                pv, dpv = horner(z[k])
                if pv == 0:
                    continue
                ratio = pv / dpv if dpv != 0 else pv
                s = mpmath.fsum(1 / (z[k] - z[j]) for j in range(n) if j != k and z[j] != z[k])
                step = ratio / (1 - ratio * s)
                z[k] -= step
                biggest = max(biggest, abs(step) / (1 + abs(z[k])))
            if biggest <= tol or all(settled(zk) for zk in z):
                converged = True
                break
        for _ in range(polish_steps):
            for k in range(n):
                pv, dpv = horner(z[k])
                if dpv != 0:
                    cand = z[k] - pv / dpv
                    if abs(horner(cand)[0]) <= abs(pv):
                        z[k] = cand
        if not converged:
            raise RootFindingError(
                f"extended-precision Aberth iteration ({precision} digits) "
                f"did not converge in {max_iter} sweeps"
            )
        out = np.array([complex(v) for v in z])
    order = np.lexsort((out.imag, out.real))
    return out[order]
