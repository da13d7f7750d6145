"""Post-fit diagnostics: where the estimate sits relative to the sample range.

Scaling the sample range ``[x_1, x_n]`` onto ``[-1, 1]`` carries the MLE into
the closed upper half of the unit disc.  Its image there (the relative
position) and the distance of that image to the boundary flag samples on
which iterative schemes are slow.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .model import Sample, SampleError, SampleLike, as_sample, cdf, mobius, mobius_inverse

__all__ = [
    "PositionReport",
    "relative_position",
    "half_circle_satisfied",
    "cdf_symmetry_residuals",
    "construct_sample_with_position",
]

_HALF_CIRCLE_SLACK = 1e-12


@dataclass(frozen=True)
class PositionReport:
    xi: complex
    relative_distance: float
    half_circle_satisfied: bool
    cdf_residuals: list = field(default_factory=list)


def half_circle_satisfied(sample: SampleLike, theta_hat) -> bool:
    """``|theta - (x_1 + x_n)/2| <= (x_n - x_1)/2`` up to rounding."""
    s = as_sample(sample)
    lo, hi = s.values[0], s.values[-1]
    t = complex(theta_hat)
    return abs(t - (lo + hi) / 2) <= (hi - lo) / 2 * (1 + _HALF_CIRCLE_SLACK)


def relative_position(sample: SampleLike, theta_hat) -> PositionReport:
    """Relative position ``xi = (2 theta - (x_n + x_1)) / (x_n - x_1)`` and friends.

    ``relative_distance`` is ``1 - |xi|``.  CDF symmetry residuals are
    included for ``n`` in {3, 4} and left empty otherwise.
    """
    s = as_sample(sample)
    lo, hi = s.values[0], s.values[-1]
    t = complex(theta_hat)
    xi = (2 * t - (hi + lo)) / (hi - lo)
    resid = cdf_symmetry_residuals(s, t) if s.n in (3, 4) else []
    return PositionReport(
        xi=xi,
        relative_distance=1.0 - abs(xi),
        half_circle_satisfied=half_circle_satisfied(s, t),
        cdf_residuals=resid,
    )


def cdf_symmetry_residuals(sample: SampleLike, theta_hat) -> list:
    """Deviations from the CDF identities at the MLE.

    n = 3: ``F(x_3) + F(x_1) - 2 F(x_2)``.
    n = 4: ``F(x_3) - F(x_1) - 1/2`` and ``F(x_4) - F(x_2) - 1/2``.
    """
    s = as_sample(sample)
    F = cdf(s.array, theta_hat)
    if s.n == 3:
        return [float(F[2] + F[0] - 2 * F[1])]
    if s.n == 4:
        return [float(F[2] - F[0] - 0.5), float(F[3] - F[1] - 0.5)]
    raise SampleError(f"CDF symmetry identities hold only for n = 3 or 4, not {s.n}")


def _arc_angle(xi: complex, t: float) -> float:
    # Argument of Mob_xi(t) in (0, 2 pi]; it increases with t.
    a = cmath.phase(mobius(xi, t))
    return a if a > 0 else a + 2 * math.pi


def construct_sample_with_position(xi: complex, n: int) -> Sample:
    """An ordered sample with ``x_1 = -1``, ``x_n = 1`` whose MLE is ``xi``.

    Points come in pairs ``(y_j, z_j)`` with ``Mob_xi(y_j) = -Mob_xi(z_j)``,
    so the likelihood equation ``sum_j Mob_xi(x_j) = 0`` holds at ``xi``.
    ``y_1 = -1`` and ``z_{n/2} = 1``; the remaining ``y`` values are spaced
    evenly in angle along the arc that keeps every partner inside [-1, 1].
    """
    xi = complex(xi)
    if n < 4 or n % 2:
        raise ValueError("n must be an even integer >= 4")
    if not (xi.imag > 0 and abs(xi) < 1):
        raise ValueError("xi must lie in the open upper half of the unit disc")
    psi1 = _arc_angle(xi, -1.0)
    psi2 = _arc_angle(xi, 1.0)
    assert psi2 - psi1 > math.pi
    m = n // 2
    ys_angles = np.linspace(psi1, psi2 - math.pi, m)
    ys = mobius_inverse(xi, np.exp(1j * ys_angles)).real
    zs = mobius_inverse(xi, -np.exp(1j * ys_angles)).real
    ys[0] = -1.0
    zs[-1] = 1.0
    return Sample(tuple(np.concatenate([ys, zs])))
