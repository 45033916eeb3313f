"""Command-line surface: reproducible JSON/CSV/SVG outputs for every module.

Every command prints a JSON document that embeds its fully resolved
configuration, so a run can be reproduced from its own output.  Angles
are radians.  Exit codes: 0 success, 1 computation error (no double
zero, non-converged horizon, failed search), 2 usage or hypothesis
error.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import extremal_algebra, quaddiff, schiffer
from .families import koebe_rotation
from .functionals import ZalcmanSpec, lambda_thresholds, zalcman_bound, zalcman_value
from .loewner import HorizonError
from .quaddiff import BranchTrackingError, QuadDiffT1
from .schiffer import NoDoubleZeroError
from .search import SearchError, lambda_sweep, optimize

ATTAINED_TOL = 1e-9


def _c(z: complex) -> dict:
    return {"re": float(np.real(z)), "im": float(np.imag(z))}


def _dump(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _emit(payload: dict, out_path: str | None) -> None:
    text = _dump(payload)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    sys.stdout.write(text)


def cmd_eval(args) -> int:
    spec = ZalcmanSpec(lam=args.lam, n=args.n, m=args.m)
    order = spec.n + spec.m - 1
    f = koebe_rotation(args.theta, order)
    value = zalcman_value(f, spec)
    bound = zalcman_bound(spec)
    modulus = abs(value)
    low, mono = lambda_thresholds(spec.n, spec.m)
    payload = {
        "command": "eval",
        "config": {"theta": args.theta, "lambda": args.lam, "n": args.n, "m": args.m,
                   "order": order},
        "value": _c(value),
        "modulus": modulus,
        "bound": bound,
        "attained": bool(abs(modulus - bound) <= ATTAINED_TOL),
        "thresholds": {"low": low, "mono": mono},
    }
    if args.lam < low:
        payload["warning"] = (
            f"lambda={args.lam} is below the nonnegativity threshold {low:.6g}; "
            "the conjectured bound is negative and cannot hold"
        )
        print(payload["warning"], file=sys.stderr)
    _emit(payload, args.out)
    return 0


def cmd_schiffer(args) -> int:
    f = koebe_rotation(args.theta, 4)
    canon, delta = schiffer.canonical_rotation(f, args.lam)
    g = schiffer.rhs_polynomial(args.lam, canon)
    sym = schiffer.check_reciprocal_symmetry(g)
    fac = schiffer.double_root_fit(g, threshold=args.threshold)
    match = schiffer.matching_residuals(fac, canon, lam=args.lam)
    d_res, c_res = schiffer.relation_check(fac)
    payload = {
        "command": "schiffer",
        "config": {"theta": args.theta, "lambda": args.lam,
                   "doubleZeroThreshold": args.threshold,
                   "canonicalDelta": delta},
        "P": _c(g.coefficient(-2)),
        "Q": _c(g.coefficient(-1)),
        "R": _c(g.coefficient(0)),
        "S": _c(g.coefficient(1)),
        "T": _c(g.coefficient(2)),
        "symmetryResidual": sym,
        "E": _c(fac.E),
        "quarticQ": [_c(q) for q in fac.q],
        "fitResidual": fac.residual,
        "matchingResiduals": [float(r) for r in match],
        "relationResiduals": {"d": d_res, "c": c_res},
    }
    _emit(payload, args.out)
    return 0


def cmd_gmax(args) -> int:
    result = extremal_algebra.maximize_two_stage()
    payload = {
        "command": "gmax",
        "config": {},
        "gMax": result.g_max,
        "bound": result.bound,
        "criticalR": result.interior_R,
        "interiorValue": result.interior_value,
        "argmax": {"R": result.argmax_R, "phi": result.argmax_phi},
        "unconstrainedGridMax": result.unconstrained_grid_max,
    }
    _emit(payload, args.out)
    return 0


def cmd_qd(args) -> int:
    qd = QuadDiffT1(complex(args.a2re, args.a2im))
    xi_star, im_slope, re_at_star = quaddiff.real_axis_report(qd)
    poly = quaddiff.trace_from_origin(qd)
    tol = args.tol * max(abs(qd.a2), 1e-12)
    crossings, verdict = quaddiff.half_plane_check([poly], tol)
    pts = quaddiff.critical_points(qd)
    if args.svg:
        markers = [
            (pts.zeros[0], "zero"),
            (pts.zeros[1], "zero"),
            (0j, "pole"),
            (complex(xi_star, 0.0), "6*x2"),
        ]
        quaddiff.emit_svg([poly], markers, args.svg)
    if args.csv:
        quaddiff.write_polylines_csv([poly], args.csv)
    payload = {
        "command": "qd",
        "config": {"a2re": args.a2re, "a2im": args.a2im, "tol": args.tol,
                   "svg": args.svg, "csv": args.csv},
        "xiStar": xi_star,
        "reAtXiStar": re_at_star,
        "imSlopeCheck": im_slope,
        "crossings": crossings,
        "verdict": bool(verdict),
        "terminationReason": poly.termination_reason.value,
        "points": int(poly.points.size),
    }
    _emit(payload, args.out)
    return 0


def cmd_search(args) -> int:
    spec = ZalcmanSpec(lam=args.lam, n=args.n, m=args.m)
    result = optimize(spec, K=args.K, starts=args.starts, seed=args.seed, dt=args.dt)
    payload = {
        "command": "search",
        "config": {"lambda": args.lam, "n": args.n, "m": args.m, "K": args.K,
                   "starts": args.starts, "seed": args.seed, "dt": args.dt},
        "bestValue": result.best_value,
        "bound": zalcman_bound(spec),
        "redFlag": bool(result.red_flag),
        "evals": result.evals,
        "bestDriving": {
            "angles": [float(a) for a in result.best_driving.angles],
            "breakpoints": [float(b) for b in result.best_driving.breakpoints],
        },
        "bestCoeffs": [_c(a) for a in result.best_coeffs.a],
    }
    _emit(payload, args.out)
    return 0


def cmd_sweep(args) -> int:
    lambdas = [float(x) for x in args.lambda_grid.split(",") if x.strip()]
    rows = lambda_sweep(args.n, args.m, lambdas, K=args.K, starts=args.starts,
                        seed=args.seed, dt=args.dt)
    lines = ["lambda,empirical_max,conjectured_bound,gap"]
    for row in rows:
        lines.append(f"{row.lam!r},{row.empirical_max!r},{row.conjectured_bound!r},{row.gap!r}")
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zalcmanlab",
        description="Generalized Zalcman functionals: evaluation, extremal "
        "differential-equation data, half-plane diagnostics, and driving-function search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a functional on a Koebe rotation")
    p.add_argument("--theta", type=float, default=0.0, help="rotation angle in radians")
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--out", default=None, help="optional JSON output path")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("schiffer", help="extremal differential-equation data for a Koebe rotation")
    p.add_argument("--theta", type=float, default=0.0)
    p.add_argument("--lambda", dest="lam", type=float, default=3.0)
    p.add_argument("--threshold", type=float, default=1e-8,
                   help="double-zero acceptance residual")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_schiffer)

    p = sub.add_parser("gmax", help="two-stage maximization of the trigonometric bound")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_gmax)

    p = sub.add_parser("qd", help="half-plane diagnostics of the lam=2 quadratic differential")
    p.add_argument("--a2re", type=float, required=True)
    p.add_argument("--a2im", type=float, required=True)
    p.add_argument("--svg", default=None, help="trajectory picture output path")
    p.add_argument("--csv", default=None, help="polyline dump output path")
    p.add_argument("--tol", type=float, default=1e-3,
                   help="origin exclusion radius, relative to |a2|")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_qd)

    p = sub.add_parser("search", help="multistart extremal search over driving phases")
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--K", type=int, default=4)
    p.add_argument("--starts", type=int, default=16)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--dt", type=float, default=1e-3)
    p.add_argument("--out", default=None, help="JSON output path")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("sweep", help="lambda sweep table for a fixed (n, m)")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--lambda-grid", required=True,
                   help="comma-separated lambda values, e.g. 1.5,2,2.5,3")
    p.add_argument("--K", type=int, default=4)
    p.add_argument("--starts", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--dt", type=float, default=1e-3)
    p.add_argument("--out", default=None, help="CSV output path")
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (NoDoubleZeroError, HorizonError, BranchTrackingError, SearchError) as exc:
        print(f"computation error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"usage/hypothesis error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
