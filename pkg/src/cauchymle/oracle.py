"""Independent checks on the production solvers.

Nothing here shares code with the fixed-point iteration or the polynomial
route: the grid search and the Newton baseline work directly on the real
log-likelihood in ``(mu, sigma)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import Sample, SampleLike, UpperHalfPoint, as_sample, log_likelihood

__all__ = [
    "GridSpec",
    "GridResult",
    "NewtonResult",
    "grid_mle",
    "grid_search",
    "score_components",
    "fd_score_check",
    "newton_raphson_baseline",
    "sample_cauchy",
    "draw_cauchy",
    "inverse_cdf",
]


@dataclass(frozen=True)
class GridSpec:
    """A rectangular search region and its refinement schedule.

    Each level evaluates ``resolution x resolution`` cell centres, then zooms
    onto the ``window`` cells either side of the best one.
    """

    mu_range: tuple[float, float]
    sigma_range: tuple[float, float]
    resolution: int = 96
    levels: int = 8
    window: int = 2

    def __post_init__(self):
        mlo, mhi = map(float, self.mu_range)
        slo, shi = map(float, self.sigma_range)
        if not mhi > mlo:
            raise ValueError("mu_range must be nonempty")
        if not (shi > slo >= 0):
            raise ValueError("sigma_range must be nonempty with a nonnegative lower end")
        if self.resolution < 16:
            raise ValueError("resolution must be at least 16")
        if self.levels < 1 or self.window < 1:
            raise ValueError("levels and window must be positive")
        object.__setattr__(self, "mu_range", (mlo, mhi))
        object.__setattr__(self, "sigma_range", (slo, shi))

    @classmethod
    def for_sample(cls, sample: SampleLike, cell: float | None = None, resolution: int = 96) -> "GridSpec":
        """The half-circle box ``[x_1, x_n] x (0, (x_n - x_1)/2]`` refined until cells are ``<= cell``.

        ``cell`` defaults to ``2.5e-4 * (x_n - x_1)``.
        """
        s = as_sample(sample)
        lo, hi = s.values[0], s.values[-1]
        span = hi - lo
        target = 2.5e-4 * span if cell is None else float(cell)
        if not target > 0:
            raise ValueError("cell must be positive")
        window = 2
        zoom = resolution / (2 * window + 1)
        levels = 1
        while span / resolution / zoom ** (levels - 1) > target:
            levels += 1
        return cls((lo, hi), (0.0, span / 2), resolution, levels, window)

    def final_cell(self) -> tuple[float, float]:
        """Cell widths ``(d_mu, d_sigma)`` at the last level."""
        shrink = ((2 * self.window + 1) / self.resolution) ** (self.levels - 1)
        dm = (self.mu_range[1] - self.mu_range[0]) / self.resolution * shrink
        ds = (self.sigma_range[1] - self.sigma_range[0]) / self.resolution * shrink
        return dm, ds


@dataclass(frozen=True)
class GridResult:
    point: UpperHalfPoint
    cell: tuple[float, float]
    log_likelihood: float


def _loglik_grid(x: np.ndarray, mu: np.ndarray, sigma: np.ndarray) -> np.ndarray:
    # Shape (len(sigma), len(mu)); constant pi terms dropped.
    n = x.size
    total = np.zeros((sigma.size, mu.size))
    s2 = (sigma**2)[:, None]
    for xj in x:
        total -= np.log((xj - mu)[None, :] ** 2 + s2)
    return total + n * np.log(sigma)[:, None]


def grid_search(sample: SampleLike, grid: GridSpec | None = None) -> GridResult:
    """Coarse-to-fine brute-force maximisation of the log-likelihood.

    Ties are broken toward the lowest flat index (sigma-major), so the result
    does not depend on how the evaluation is split up.
    """
    s = as_sample(sample)
    g = grid if grid is not None else GridSpec.for_sample(s)
    x = s.array
    (mlo, mhi), (slo, shi) = g.mu_range, g.sigma_range
    res = g.resolution
    best_val = -math.inf
    mu_c = sig_c = float("nan")
    for _ in range(g.levels):
        dm = (mhi - mlo) / res
        ds = (shi - slo) / res
        mu = mlo + dm * (np.arange(res) + 0.5)
        sigma = slo + ds * (np.arange(res) + 0.5)
        vals = _loglik_grid(x, mu, sigma)
        k = int(np.argmax(vals))
        i, j = divmod(k, res)
        best_val = float(vals[i, j])
        mu_c, sig_c = float(mu[j]), float(sigma[i])
        w = g.window + 0.5
        mlo, mhi = mu_c - w * dm, mu_c + w * dm
        slo, shi = max(sig_c - w * ds, 0.0), sig_c + w * ds
    point = UpperHalfPoint(mu_c, sig_c)
    return GridResult(point, (dm, ds), best_val - s.n * math.log(math.pi))


def grid_mle(sample: SampleLike, grid: GridSpec | None = None) -> UpperHalfPoint:
    """Brute-force MLE; see :func:`grid_search` for the cell size reached."""
    return grid_search(sample, grid).point


def score_components(sample: SampleLike, theta) -> tuple[float, float]:
    """``(sum (x_j - mu)/D_j, sum sigma**2/D_j - n/2)`` with ``D_j = (x_j - mu)**2 + sigma**2``."""
    s = as_sample(sample)
    t = complex(theta)
    u = s.array - t.real
    d = u**2 + t.imag**2
    return float(np.sum(u / d)), float(np.sum(t.imag**2 / d) - s.n / 2)


def fd_score_check(sample: SampleLike, theta, step: float = 1e-5) -> tuple[float, float]:
    """Discrepancies between analytic scores and central differences of the log-likelihood.

    ``dl/dmu = 2 * score_mu`` and ``dl/dsigma = -(2/sigma) * score_sigma``;
    the returned pair is ``(|FD_mu/2 - score_mu|, |-sigma FD_sigma/2 - score_sigma|)``.
    """
    s = as_sample(sample)
    t = complex(theta)
    mu, sigma = t.real, t.imag
    if not sigma > 0:
        raise ValueError("sigma must be positive")
    sm, ss = score_components(s, t)
    fd_mu = (log_likelihood(s, complex(mu + step, sigma)) - log_likelihood(s, complex(mu - step, sigma))) / (2 * step)
    fd_sig = (log_likelihood(s, complex(mu, sigma + step)) - log_likelihood(s, complex(mu, sigma - step))) / (2 * step)
    return abs(fd_mu / 2 - sm), abs(-sigma * fd_sig / 2 - ss)


@dataclass(frozen=True)
class NewtonResult:
    """Outcome of the Newton baseline; ``estimate`` is None unless it converged."""

    estimate: UpperHalfPoint | None
    iterations: int
    converged: bool
    diverged: bool
    reason: str
    last: complex


def _grad_hess(x: np.ndarray, mu: float, sigma: float):
    n = x.size
    u = x - mu
    d = u**2 + sigma**2
    d2 = d**2
    g = np.array([np.sum(2 * u / d), n / sigma - np.sum(2 * sigma / d)])
    a = np.sum(2 * (u**2 - sigma**2) / d2)
    b = np.sum(-4 * u * sigma / d2)
    H = np.array([[a, b], [b, -n / sigma**2 - a]])
    return g, H


def newton_raphson_baseline(
    sample: SampleLike,
    start=None,
    max_iter: int = 200,
    tol: float = 1e-12,
    max_halvings: int = 40,
) -> NewtonResult:
    """Newton-Raphson on the two real score equations with step halving.

    A step is halved until ``sigma`` stays positive and the log-likelihood
    does not decrease.  The run is reported as diverged (never raised) when
    the Hessian is singular or not negative definite, a step is non-finite,
    step halving fails, or the iterate leaves every bounded neighbourhood of
    the data.

    Parameters
    ----------
    start : UpperHalfPoint or complex, optional
        Defaults to the median + i * IQR starting point.
    """
    from .iterative import starting_point

    s = as_sample(sample)
    x = s.array
    z = complex(start) if start is not None else starting_point(s).theta
    mu, sigma = z.real, z.imag
    spread = s.values[-1] - s.values[0]
    scale = max(spread, abs(s.values[0]), abs(s.values[-1]))

    def report(it, converged, reason):
        est = UpperHalfPoint(mu, sigma) if converged else None
        return NewtonResult(est, it, converged, not converged and reason != "max_iter", reason, complex(mu, sigma))

    ll = log_likelihood(s, complex(mu, sigma))
    for it in range(1, max_iter + 1):
        g, H = _grad_hess(x, mu, sigma)
        if not (np.all(np.isfinite(g)) and np.all(np.isfinite(H))):
            return report(it, False, "non-finite derivatives")
        if not (H[0, 0] < 0 and np.linalg.det(H) > 0):
            return report(it, False, "Hessian not negative definite")
        try:
            step = np.linalg.solve(H, -g)
        except np.linalg.LinAlgError:
            return report(it, False, "singular Hessian")
        if not np.all(np.isfinite(step)):
            return report(it, False, "non-finite step")
        if math.hypot(*step) <= tol * (1 + math.hypot(mu, sigma)):
            mu, sigma = mu + step[0], sigma + step[1]
            return report(it, True, "converged")
        t = 1.0
        for _ in range(max_halvings):
            cm, cs = mu + t * step[0], sigma + t * step[1]
            if cs > 0:
                cl = log_likelihood(s, complex(cm, cs))
                if cl >= ll:
                    break
            t /= 2
        else:
            return report(it, False, "step halving failed")
        mu, sigma, ll = cm, cs, cl
        if not (math.isfinite(mu) and math.isfinite(sigma)) or math.hypot(mu, sigma) > 1e6 * scale:
            return report(it, False, "iterate escaped")
        if t * math.hypot(*step) <= tol * (1 + math.hypot(mu, sigma)):
            return report(it, True, "converged")
    return report(max_iter, False, "max_iter")


def inverse_cdf(u, theta):
    """``mu + sigma * tan(pi (u - 1/2))``; ``u = 1/2`` gives exactly ``mu``."""
    t = complex(theta)
    u = np.asarray(u, dtype=float)
    out = t.real + t.imag * np.tan(np.pi * (u - 0.5))
    return out if out.ndim else float(out)


def draw_cauchy(theta, n: int, seed: int) -> np.ndarray:
    """``n`` raw Cauchy draws by inversion of uniforms from numpy's PCG64 generator."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    t = complex(theta)
    if not (t.imag > 0 and math.isfinite(t.imag) and math.isfinite(t.real)):
        raise ValueError("sigma must be positive and finite")
    rng = np.random.Generator(np.random.PCG64(seed))
    return np.asarray(inverse_cdf(rng.random(n), t), dtype=float)


def sample_cauchy(theta, n: int, seed: int) -> Sample:
    """A :class:`Sample` of ``n >= 3`` draws from :func:`draw_cauchy`."""
    if n < 3:
        raise ValueError("n must be at least 3")
    return Sample.from_data(draw_cauchy(theta, n, seed).tolist())
