"""Multistart search for extremal driving functions.

The objective |lam a_n a_m - a_{n+m-1}| is maximized over the phases of a
piecewise-constant driving function.  The landscape is smooth in the
phases, so a derivative-free simplex descent on the negated objective is
run from one deterministic constant-driving start plus seeded random
starts.  Per-start sub-seeds are derived from the base seed, so serial
and parallel execution would agree and repeat runs are identical.

Values above the conjectured bound are never clamped; they raise a red
flag in the result, since for (lam, n, m) = (3, 2, 3) such a value would
contradict the proved bound or reveal an integration bug.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from .families import CoefficientVector
from .functionals import ZalcmanSpec, zalcman_bound, zalcman_value
from .loewner import DrivingFunction, evolve

RED_FLAG_SLACK = 0.05
DEFAULT_DRIVING_SPAN = 10.0


class SearchError(RuntimeError):
    """Every start failed to produce a usable candidate."""


@dataclass
class SearchResult:
    best_value: float
    best_driving: DrivingFunction
    best_coeffs: CoefficientVector
    spec: ZalcmanSpec
    starts: int
    evals: int
    seed: int
    red_flag: bool


@dataclass
class SweepRow:
    lam: float
    empirical_max: float
    conjectured_bound: float
    gap: float


def objective(
    driving: DrivingFunction,
    spec: ZalcmanSpec,
    N: int | None = None,
    dt: float = 1e-3,
) -> float:
    """|lam a_n a_m - a_{n+m-1}| of the evolved driving.

    By rotation invariance of the modulus this equals the quantity whose
    real-part supremum defines the extremal problem.
    """
    top = spec.n + spec.m - 1
    if N is None:
        N = top
    if N < top:
        raise ValueError(f"need N >= {top}")
    coeffs = evolve(driving, N=N, dt=dt)
    return abs(zalcman_value(coeffs, spec))


def _start_phases(K: int, seed: int, index: int) -> np.ndarray:
    # index 0 is the deterministic constant-driving start
    if index == 0:
        return np.zeros(K)
    rng = np.random.default_rng(np.random.SeedSequence([seed, index]))
    return rng.uniform(0.0, 2 * np.pi, K)


def optimize(
    spec: ZalcmanSpec,
    K: int = 4,
    starts: int = 16,
    seed: int = 0,
    dt: float = 1e-3,
    span: float = DEFAULT_DRIVING_SPAN,
    maxfev: int = 300,
) -> SearchResult:
    """Best driving over `starts` simplex descents; deterministic in seed.

    Start 0 holds all phases constant (a Koebe rotation after evolution);
    the rest are uniform random phases from per-start sub-seeds.  Phases
    live on equispaced breakpoints over [0, span]; the evolution itself
    runs to its default horizon with the last phase held.
    """
    if starts < 1:
        raise ValueError("need starts >= 1")
    breakpoints = np.linspace(0.0, span, K + 1)
    total_evals = 0
    best = None
    failures = []

    def negated(phases: np.ndarray) -> float:
        driving = DrivingFunction(angles=phases, breakpoints=breakpoints)
        return -objective(driving, spec, dt=dt)

    for index in range(starts):
        x0 = _start_phases(K, seed, index)
        res = minimize(
            negated,
            x0,
            method="Nelder-Mead",
            options={"maxfev": maxfev, "xatol": 1e-6, "fatol": 1e-10},
        )
        total_evals += int(res.nfev)
        value = -float(res.fun)
        if not np.isfinite(value):
            failures.append((index, res.message))
            continue
        if best is None or value > best[0]:
            best = (value, np.asarray(res.x, dtype=float))

    if best is None:
        raise SearchError(f"all {starts} starts failed: {failures}")

    best_value, best_x = best
    best_driving = DrivingFunction(angles=best_x, breakpoints=breakpoints.copy())
    top = spec.n + spec.m - 1
    best_coeffs = evolve(best_driving, N=top, dt=dt)
    recomputed = abs(zalcman_value(best_coeffs, spec))
    return SearchResult(
        best_value=recomputed,
        best_driving=best_driving,
        best_coeffs=best_coeffs,
        spec=spec,
        starts=starts,
        evals=total_evals,
        seed=seed,
        red_flag=recomputed > zalcman_bound(spec) + RED_FLAG_SLACK,
    )


def lambda_sweep(
    n: int,
    m: int,
    lambdas: list[float],
    K: int = 4,
    starts: int = 8,
    seed: int = 0,
    dt: float = 1e-3,
) -> list[SweepRow]:
    """One optimize run per lambda, reported against the conjectured bound.

    The gap bound - empirical_max is reported as found; a negative gap is
    evidence about the least workable lambda, never an assertion.
    """
    if not lambdas:
        raise ValueError("need at least one lambda")
    rows = []
    for lam in sorted(lambdas):
        spec = ZalcmanSpec(lam=lam, n=n, m=m)
        result = optimize(spec, K=K, starts=starts, seed=seed, dt=dt)
        bound = zalcman_bound(spec)
        rows.append(
            SweepRow(
                lam=float(lam),
                empirical_max=result.best_value,
                conjectured_bound=bound,
                gap=bound - result.best_value,
            )
        )
    return rows
