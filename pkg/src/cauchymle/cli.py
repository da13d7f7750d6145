"""Command-line front end: ``cauchymle {fit,poly,circular,compare,sample}``.

Exit codes
----------
0  success
2  bad input (unparseable values, too few distinct observations, bad flags)
3  no enabled method converged
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
import time
from typing import Sequence

import numpy as np

from .algebraic import AlgebraicFitError, emit_coefficients, fit_algebraic
from .iterative import CircularSample, ConvergenceError, fit_circular
from .model import PoleError, Sample, SampleError, UpperHalfPoint, parse_exact
from .oracle import draw_cauchy
from .report import METHODS, FitReport, fit

__all__ = ["main", "parse_values", "build_parser", "EXIT_OK", "EXIT_BAD_INPUT", "EXIT_NO_CONVERGENCE"]

EXIT_OK = 0
EXIT_BAD_INPUT = 2
EXIT_NO_CONVERGENCE = 3

_SEPARATORS = re.compile(r"[\s,]+")


class BadInput(Exception):
    pass


def parse_values(text: str) -> list:
    """Numbers separated by whitespace, newlines or commas; ``#`` starts a comment.

    Each token is a decimal or a ``p/q`` rational and is kept exact.
    """
    out = []
    for line in text.splitlines():
        body = line.split("#", 1)[0]
        for tok in _SEPARATORS.split(body.strip()):
            if not tok:
                continue
            try:
                out.append(parse_exact(tok))
            except SampleError as exc:
                raise BadInput(str(exc)) from exc
    return out


def _read_input(args) -> str:
    if getattr(args, "values", None):
        return " ".join(args.values)
    if args.input and args.input != "-":
        try:
            with open(args.input, encoding="utf-8") as fh:
                return fh.read()
        except OSError as exc:
            raise BadInput(f"cannot read {args.input}: {exc}") from exc
    return sys.stdin.read()


def _load_sample(args) -> Sample:
    try:
        return Sample.from_data(parse_values(_read_input(args)))
    except SampleError as exc:
        raise BadInput(str(exc)) from exc


def _parse_start(text: str | None) -> UpperHalfPoint | None:
    if text is None:
        return None
    parts = [p for p in _SEPARATORS.split(text.strip()) if p]
    if len(parts) != 2:
        raise BadInput(f"--start expects 'mu,sigma', got {text!r}")
    try:
        return UpperHalfPoint(float(parts[0]), float(parts[1]))
    except ValueError as exc:
        raise BadInput(f"bad --start {text!r}: {exc}") from exc


def _emit(obj, fmt: str, text_lines: Sequence[str]) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(obj, allow_nan=False) + "\n")
    else:
        sys.stdout.write("\n".join(text_lines) + "\n")


def _fmt(x) -> str:
    # repr is the shortest string that round-trips, the same digits JSON shows.
    return "null" if x is None else repr(x)


def report_text(d: dict) -> list:
    lines = [
        f"mu: {_fmt(d['mu'])}",
        f"sigma: {_fmt(d['sigma'])}",
        f"method: {d['method']}",
        f"iterations: {d['iterations']}",
        f"converged: {str(d['converged']).lower()}",
    ]
    for k, v in d["residuals"].items():
        lines.append(f"residual.{k}: {_fmt(v)}")
    diag = d["diagnostics"]
    if diag is not None:
        rp = diag["relative_position"]
        lines.append(f"relative_position: {_fmt(rp['re'])} {_fmt(rp['im'])}")
        lines.append(f"relative_distance: {_fmt(diag['relative_distance'])}")
        lines.append(f"half_circle_satisfied: {str(diag['half_circle_satisfied']).lower()}")
        if diag["cdf_residuals"]:
            lines.append("cdf_residuals: " + " ".join(_fmt(v) for v in diag["cdf_residuals"]))
        lines.append(f"contraction: {_fmt(diag['contraction'])}")
    lines.append("path: " + " ".join(d["path"]))
    for w in d["warnings"]:
        lines.append(f"warning: {w}")
    return lines


def _cmd_fit(args) -> int:
    s = _load_sample(args)
    start = _parse_start(args.start)
    try:
        rep = fit(s, method=args.method, tol=args.tol, max_iter=args.max_iter, start=start)
    except SampleError as exc:
        raise BadInput(str(exc)) from exc
    d = rep.to_dict()
    _emit(d, args.format, report_text(d))
    return EXIT_OK if rep.converged else EXIT_NO_CONVERGENCE


def _cmd_poly(args) -> int:
    s = _load_sample(args)
    if args.emit == "coeffs":
        from .algebraic import build_Rn

        R = build_Rn(s)
        text = emit_coefficients(R, "json" if args.format == "json" else "integers")
        sys.stdout.write(text + "\n")
        return EXIT_OK
    try:
        af = fit_algebraic(s, tol=max(args.tol, 1e-8))
    except AlgebraicFitError as exc:
        sys.stderr.write(f"cauchymle: {exc}\n")
        return EXIT_NO_CONVERGENCE
    chosen = af.chosen.theta
    # The reported roots are unpolished; mark the one nearest the selected estimate.
    k = int(np.argmin(np.abs(af.roots - chosen)))
    roots = [{"re": float(z.real), "im": float(z.imag), "selected": i == k} for i, z in enumerate(af.roots)]
    obj = {
        "degree": af.degree,
        "roots": roots,
        "selected": {"re": chosen.real, "im": chosen.imag},
        "residual": af.residual,
    }
    lines = [f"{_fmt(r['re'])} {_fmt(r['im'])}" + ("  *" if r["selected"] else "") for r in roots]
    lines.append(f"selected: {_fmt(chosen.real)} {_fmt(chosen.imag)}")
    _emit(obj, args.format, lines)
    return EXIT_OK


def _cmd_circular(args) -> int:
    try:
        angles = [float(v) for v in parse_values(_read_input(args))]
        c = CircularSample(tuple(angles))
    except SampleError as exc:
        raise BadInput(str(exc)) from exc
    try:
        cf = fit_circular(c, tol=args.tol, max_iter=args.max_iter)
    except ConvergenceError as exc:
        sys.stderr.write(f"cauchymle: {exc}\n")
        return EXIT_NO_CONVERGENCE
    obj = {
        "psi": {"re": cf.psi.real, "im": cf.psi.imag},
        "modulus": abs(cf.psi),
        "iterations": cf.iterations,
        "converged": cf.converged,
        "residual": cf.residual,
    }
    lines = [
        f"psi: {_fmt(cf.psi.real)} {_fmt(cf.psi.imag)}",
        f"modulus: {_fmt(abs(cf.psi))}",
        f"iterations: {cf.iterations}",
        f"converged: {str(cf.converged).lower()}",
        f"residual: {_fmt(cf.residual)}",
    ]
    _emit(obj, args.format, lines)
    return EXIT_OK


def _compare_row(s: Sample, method: str, args, start) -> dict:
    t0 = time.perf_counter()
    try:
        rep: FitReport = fit(s, method=method, tol=args.tol, max_iter=args.max_iter, start=start)
        err = None
    except (SampleError, ArithmeticError, ValueError) as exc:
        rep, err = None, f"{type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - t0
    if rep is None:
        return {"method": method, "mu": None, "sigma": None, "iterations": 0, "converged": False,
                "residual_eq28": None, "wall_time": elapsed, "status": err}
    status = "converged" if rep.converged else ("; ".join(rep.warnings) or "not converged")
    return {
        "method": method,
        "mu": rep.mu,
        "sigma": rep.sigma,
        "iterations": rep.iterations,
        "converged": rep.converged,
        "residual_eq28": rep.residuals.get("eq28"),
        "wall_time": elapsed,
        "status": status,
    }


def _cmd_compare(args) -> int:
    s = _load_sample(args)
    start = _parse_start(args.start)
    if args.methods:
        methods = [m.strip() for m in args.methods.split(",") if m.strip()]
        bad = [m for m in methods if m not in METHODS or m == "auto"]
        if bad:
            raise BadInput(f"unknown method(s) for compare: {', '.join(bad)}")
    else:
        methods = ["iterate", "newton", "poly"] + (["closed"] if s.n in (3, 4) else [])
    rows = sorted((_compare_row(s, m, args, start) for m in set(methods)), key=lambda r: r["method"])
    lines = [f"{'method':<8} {'estimate':<44} {'iter':>8} {'conv':>5} {'eq28':>10} {'time[s]':>9}  status"]
    for r in rows:
        est = "-" if r["mu"] is None else f"{r['mu']:.10g}{r['sigma']:+.10g}i"
        res = "-" if r["residual_eq28"] is None else f"{r['residual_eq28']:.2e}"
        lines.append(
            f"{r['method']:<8} {est:<44} {r['iterations']:>8} {str(r['converged']).lower():>5} "
            f"{res:>10} {r['wall_time']:>9.4f}  {r['status']}"
        )
    _emit({"n": s.n, "rows": rows}, args.format, lines)
    return EXIT_OK


def _cmd_sample(args) -> int:
    if args.n < 1:
        raise BadInput("n must be at least 1")
    if not (args.sigma > 0 and math.isfinite(args.sigma) and math.isfinite(args.mu)):
        raise BadInput("sigma must be positive and mu finite")
    draws = draw_cauchy(complex(args.mu, args.sigma), args.n, args.seed)
    sys.stdout.write("".join(f"{v!r}\n" for v in draws.tolist()))
    return EXIT_OK


def _positive_float(text: str) -> float:
    try:
        v = float(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from exc
    if not (v > 0 and math.isfinite(v)):
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from exc
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cauchymle", description="Cauchy maximum-likelihood estimation.")
    sub = p.add_subparsers(dest="command", required=True)

    def data_args(sp, solver=True):
        sp.add_argument("values", nargs="*", help="observations (otherwise read from --input or stdin)")
        sp.add_argument("--input", "-i", help="file of observations ('-' for stdin)")
        sp.add_argument("--format", choices=("json", "text"), default="json")
        if solver:
            sp.add_argument("--tol", type=_positive_float, default=1e-12)
            sp.add_argument("--max-iter", type=_positive_int, default=10**6)

    sp = sub.add_parser("fit", help="fit the MLE")
    data_args(sp)
    sp.add_argument("--method", choices=METHODS, default="auto")
    sp.add_argument("--start", help="starting point 'mu,sigma' for iterate/newton")
    sp.set_defaults(func=_cmd_fit)

    sp = sub.add_parser("poly", help="exact polynomial R_n: coefficients or roots")
    data_args(sp)
    sp.add_argument("--emit", choices=("coeffs", "roots"), default="coeffs")
    sp.set_defaults(func=_cmd_poly)

    sp = sub.add_parser("circular", help="fit a circular Cauchy sample of angles in [0, 2 pi)")
    data_args(sp)
    sp.set_defaults(func=_cmd_circular)

    sp = sub.add_parser("compare", help="run several methods side by side")
    data_args(sp)
    sp.add_argument("--methods", help="comma-separated subset of iterate,closed,poly,newton")
    sp.add_argument("--start", help="starting point 'mu,sigma' for iterate/newton")
    sp.set_defaults(func=_cmd_compare)

    sp = sub.add_parser("sample", help="seeded Cauchy draws, one per line")
    sp.add_argument("--mu", type=float, default=0.0)
    sp.add_argument("--sigma", type=float, default=1.0)
    sp.add_argument("--n", type=int, default=10)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=_cmd_sample)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BadInput as exc:
        sys.stderr.write(f"cauchymle: {exc}\n")
        return EXIT_BAD_INPUT
    except PoleError as exc:
        sys.stderr.write(f"cauchymle: {exc}\n")
        return EXIT_NO_CONVERGENCE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
