"""Maximum-likelihood estimation for the Cauchy distribution.

The location and scale are fitted jointly as one complex parameter
``theta = mu + i*sigma`` in the upper half-plane.  Three independent
routes are provided:

* :func:`fit_iterative`, the fixed-point iteration of ``Q = q o q``;
* :func:`fit_n3` / :func:`fit_n4`, closed forms for three or four points;
* :func:`fit_algebraic`, root extraction from the exact polynomial ``R_n``.

:func:`fit` picks and chains them; :mod:`cauchymle.oracle` holds brute-force
checks and :mod:`cauchymle.cli` the command-line front end.
"""

from .algebraic import (
    AlgebraicFit,
    AlgebraicFitError,
    build_Rn,
    construct_Rn,
    emit_coefficients,
    fit_algebraic,
    parse_coefficients,
)
from .closedform import closed_form_exact, fit_n3, fit_n4, r3_polynomial, r4_factors, r4_polynomial
from .diagnostics import (
    PositionReport,
    cdf_symmetry_residuals,
    construct_sample_with_position,
    half_circle_satisfied,
    relative_position,
)
from .iterative import (
    CircularFit,
    CircularSample,
    ConvergenceError,
    DegenerateSpreadWarning,
    IterationTrace,
    Q_map,
    Q_tilde,
    Q_tilde_conjugated,
    contraction_check,
    fit_circular,
    fit_iterative,
    pseudo_hyperbolic,
    q_derivative,
    q_map,
    q_tilde,
    stability_probe,
    starting_point,
)
from .model import (
    PoleError,
    Sample,
    SampleError,
    UpperHalfPoint,
    as_sample,
    build_h,
    cdf,
    density,
    equation_residuals,
    log_likelihood,
    mobius,
    mobius_inverse,
)
from .oracle import GridSpec, fd_score_check, grid_mle, newton_raphson_baseline, sample_cauchy
from .report import METHODS, FitReport, fit

__version__ = "0.1.0"

__all__ = [
    "AlgebraicFit",
    "AlgebraicFitError",
    "CircularFit",
    "CircularSample",
    "ConvergenceError",
    "DegenerateSpreadWarning",
    "FitReport",
    "GridSpec",
    "IterationTrace",
    "METHODS",
    "PoleError",
    "PositionReport",
    "Q_map",
    "Q_tilde",
    "Q_tilde_conjugated",
    "Sample",
    "SampleError",
    "UpperHalfPoint",
    "as_sample",
    "build_Rn",
    "build_h",
    "cdf",
    "cdf_symmetry_residuals",
    "closed_form_exact",
    "construct_Rn",
    "construct_sample_with_position",
    "contraction_check",
    "density",
    "emit_coefficients",
    "equation_residuals",
    "fd_score_check",
    "fit",
    "fit_algebraic",
    "fit_circular",
    "fit_iterative",
    "fit_n3",
    "fit_n4",
    "grid_mle",
    "half_circle_satisfied",
    "log_likelihood",
    "mobius",
    "mobius_inverse",
    "newton_raphson_baseline",
    "parse_coefficients",
    "pseudo_hyperbolic",
    "q_derivative",
    "q_map",
    "q_tilde",
    "r3_polynomial",
    "r4_factors",
    "r4_polynomial",
    "relative_position",
    "sample_cauchy",
    "stability_probe",
    "starting_point",
]
