"""Half-plane diagnostics for the lam = 2 extremal quadratic differential.

For a candidate extremal of |2 a_2 a_3 - a_4| the associated quadratic
differential, pulled back to the xi = 1/w plane, is

    Q(xi) d xi^2 = -(-3 a_2^2 + a_2 xi + xi^2) d xi^2 / xi.

lam = 2 is hard-wired: it kills the a_3 dependence, leaving the two real
parameters x_2 = Re a_2 and y_2 = Im a_2.  On the real axis the imaginary
part (6 x_2 y_2 - y_2 xi)/xi vanishes only at xi = 6 x_2, where the real
part equals -(3 y_2^2 + 39 x_2^2)/(6 x_2) < 0 for x_2 > 0.  By the
sign criterion for critical trajectories this pins the boundary curve of
the extremal image to a single half plane, touching the axis only at the
origin; the tracer below verifies that numerically.

Trajectories are arcs along which Q(xi) (d xi)^2 > 0: they are traced by
integrating d xi/ds = e^{i delta(xi)} with delta = -arg(Q)/2 and the
square-root branch continued along the curve.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

_SQRT13 = math.sqrt(13.0)


class BranchTrackingError(RuntimeError):
    """The square-root direction field turned by more than pi/2 in one step."""


class TerminationReason(str, Enum):
    REACHED_POLE = "reached-pole"
    REACHED_ZERO = "reached-zero"
    STEP_LIMIT = "step-limit"
    ESCAPED_RADIUS = "escaped-radius"


@dataclass
class QuadDiffT1:
    """Parameter a_2 of the lam = 2 differential; requires Re > 0, Im != 0."""

    a2: complex

    def __post_init__(self) -> None:
        self.a2 = complex(self.a2)
        if self.a2.real <= 0:
            raise ValueError(f"hypothesis violated: Re a2 = {self.a2.real} must be > 0")
        if self.a2.imag == 0:
            raise ValueError("hypothesis violated: Im a2 must be nonzero")


@dataclass
class TrajectoryPolyline:
    """Sampled trajectory with the step bound used while tracing."""

    points: np.ndarray
    termination_reason: TerminationReason
    step_bound: float = field(default=0.0)


def _a2_of(qd) -> complex:
    # plain complex values are accepted for algebraic probes that do not
    # need the half-plane hypotheses
    return qd.a2 if isinstance(qd, QuadDiffT1) else complex(qd)


def q_of_xi(qd, xi: complex) -> complex:
    """Q(xi) = -(-3 a_2^2 + a_2 xi + xi^2)/xi; simple pole at the origin."""
    xi = complex(xi)
    if xi == 0:
        raise ValueError("xi = 0 is a simple pole of the differential")
    a2 = _a2_of(qd)
    return -(-3 * a2 * a2 + a2 * xi + xi * xi) / xi


def real_axis_report(
    qd: QuadDiffT1, grid: np.ndarray | None = None
) -> tuple[float, float, float]:
    """(xi_star, im_slope_check, re_at_xi_star) for the real-axis sign analysis.

    xi_star = 6 x_2 is the only real zero of Im Q; im_slope_check is the
    worst deviation of Im Q from (6 x_2 y_2 - y_2 xi)/xi over the grid;
    re_at_xi_star is the closed form -(3 y_2^2 + 39 x_2^2)/(6 x_2),
    cross-checked against direct evaluation.
    """
    x2, y2 = qd.a2.real, qd.a2.imag
    xi_star = 6.0 * x2
    if grid is None:
        grid = np.linspace(-20.0, 20.0, 2001)
    grid = np.asarray(grid, dtype=float)
    grid = grid[grid != 0.0]
    im_direct = np.array([q_of_xi(qd, x).imag for x in grid])
    im_formula = (6 * x2 * y2 - y2 * grid) / grid
    im_slope_check = float(np.max(np.abs(im_direct - im_formula)))
    re_closed = -(3 * y2 * y2 + 39 * x2 * x2) / (6 * x2)
    re_direct = q_of_xi(qd, xi_star).real
    if abs(re_direct - re_closed) > 1e-9 * max(1.0, abs(re_closed)):
        raise AssertionError(
            f"closed form {re_closed} disagrees with direct evaluation {re_direct}"
        )
    return xi_star, im_slope_check, re_closed


@dataclass
class CriticalPoints:
    """Singularities: two simple zeros, simple pole at 0, order-5 pole at infinity."""

    zeros: tuple[complex, complex]
    simple_pole: complex
    infinity_pole_order: int


def critical_points(qd) -> CriticalPoints:
    """Zeros a_2(-1 +- sqrt(13))/2 plus the pole classification."""
    a2 = _a2_of(qd)
    z1 = a2 * (-1 + _SQRT13) / 2
    z2 = a2 * (-1 - _SQRT13) / 2
    return CriticalPoints(zeros=(z1, z2), simple_pole=0j, infinity_pole_order=5)


def origin_trajectory_angle(qd) -> float:
    """Direction of the single trajectory ray entering the origin pole.

    Near 0, Q ~ 3 a_2^2 / xi; positivity of Q dxi^2 along a ray xi = t e^{i phi}
    requires arg(3 a_2^2) + phi = 0 (mod 2 pi), one direction only.
    """
    a2 = _a2_of(qd)
    return float(-np.angle(3 * a2 * a2))


def zero_trajectory_angles(qd, zero: complex) -> list[float]:
    """The three trajectory directions leaving a simple zero, 2 pi/3 apart."""
    a2 = _a2_of(qd)
    # Q = -(xi - z1)(xi - z2)/xi, so Q'(zero) = -(zero - other)/zero
    pts = critical_points(a2)
    other = pts.zeros[1] if abs(zero - pts.zeros[0]) < abs(zero - pts.zeros[1]) else pts.zeros[0]
    qprime = -(zero - other) / zero
    base = -np.angle(qprime)
    return [float((base + 2 * math.pi * k) / 3) for k in range(3)]


def _direction(a2: complex, xi: complex, ref: complex) -> complex:
    """Unit square-root direction at xi on the branch nearest ref."""
    q = -(-3 * a2 * a2 + a2 * xi + xi * xi) / xi
    d = np.exp(-0.5j * np.angle(q))
    if d.real * ref.real + d.imag * ref.imag < 0:
        d = -d
    return d


def trace_trajectory(
    qd,
    start: complex,
    orientation: int = 1,
    max_steps: int = 1_000_000,
    ds: float = 1e-3,
    far_field_factor: float = 20.0,
) -> TrajectoryPolyline:
    """Trace the trajectory through ``start`` in arclength steps of ds.

    The branch of sqrt(Q) is continued by nearest-direction matching with
    step halving whenever the field turns by more than pi/4 over a step;
    a persistent turn beyond pi/2 raises BranchTrackingError.  Far from
    all singularities the step is allowed to grow up to
    far_field_factor * ds (the polyline's recorded step bound).
    Termination: capture near the origin pole or a zero, escape beyond
    50 |a_2|, or the step limit.
    """
    if ds <= 0:
        raise ValueError("ds must be positive")
    a2 = _a2_of(qd)
    pts_struct = critical_points(a2)
    zeros = pts_struct.zeros
    if start == 0 or min(abs(start - z) for z in zeros) == 0:
        raise ValueError("start must not be a singularity")
    escape = 50.0 * max(abs(a2), 1e-12)
    capture = 5.0 * ds
    step_bound = far_field_factor * ds

    xi = complex(start)
    d0 = np.exp(-0.5j * np.angle(q_of_xi(a2, xi)))
    ref = orientation * d0
    points = [xi]
    reason = TerminationReason.STEP_LIMIT

    for _ in range(max_steps):
        d_sing = min(abs(xi), abs(xi - zeros[0]), abs(xi - zeros[1]))
        h = min(step_bound, max(ds, 0.02 * d_sing))
        while True:
            k1 = _direction(a2, xi, ref)
            k2 = _direction(a2, xi + 0.5 * h * k1, k1)
            k3 = _direction(a2, xi + 0.5 * h * k2, k2)
            k4 = _direction(a2, xi + h * k3, k3)
            step = (h / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)
            new_ref = _direction(a2, xi + step, k4)
            turn = abs(np.angle(new_ref / ref))
            if turn <= math.pi / 4:
                break
            if h < ds / 1024:
                if turn > math.pi / 2:
                    raise BranchTrackingError(
                        f"direction turned by {turn:.3f} rad at xi={xi:.6g} with step {h:.3g}"
                    )
                break
            h *= 0.5
        xi = xi + step
        ref = new_ref
        points.append(xi)
        if abs(xi) < capture:
            reason = TerminationReason.REACHED_POLE
            break
        if min(abs(xi - zeros[0]), abs(xi - zeros[1])) < capture:
            reason = TerminationReason.REACHED_ZERO
            break
        if abs(xi) > escape:
            reason = TerminationReason.ESCAPED_RADIUS
            break

    return TrajectoryPolyline(
        points=np.asarray(points, dtype=complex),
        termination_reason=reason,
        step_bound=step_bound,
    )


def trace_from_origin(
    qd: QuadDiffT1,
    ds: float | None = None,
    start_radius: float | None = None,
    max_steps: int = 1_000_000,
) -> TrajectoryPolyline:
    """Trace the critical trajectory leaving the origin pole, outward.

    This is the candidate boundary curve of the extremal image: the one
    trajectory ray entering the simple pole, started just off the origin
    and oriented away from it.
    """
    scale = abs(qd.a2)
    if ds is None:
        ds = 1e-3 * scale
    phi0 = origin_trajectory_angle(qd)
    if start_radius is None:
        start_radius = max(20 * ds, 0.01 * scale)
    start = start_radius * np.exp(1j * phi0)
    outward = np.exp(1j * phi0)
    d0 = np.exp(-0.5j * np.angle(q_of_xi(qd, start)))
    orientation = 1 if (d0.real * outward.real + d0.imag * outward.imag) >= 0 else -1
    return trace_trajectory(qd, start, orientation=orientation, max_steps=max_steps, ds=ds)


def half_plane_check(
    polylines: list[TrajectoryPolyline], tol: float
) -> tuple[int, bool]:
    """Count real-axis sign changes away from the origin across polylines.

    Points within tol of the origin are excluded (the curve is allowed to
    meet the axis there); the verdict is True iff no crossing remains.
    """
    crossings = 0
    for poly in polylines:
        pts = np.asarray(poly.points, dtype=complex)
        keep = pts[np.abs(pts) > tol]
        signs = np.sign(keep.imag)
        signs = signs[signs != 0]
        if signs.size >= 2:
            crossings += int(np.sum(signs[1:] * signs[:-1] < 0))
    return crossings, crossings == 0


def emit_svg(
    polylines: list[TrajectoryPolyline],
    markers: list[tuple[complex, str]],
    output_path,
) -> None:
    """Write a deterministic SVG of trajectories over the marked plane.

    Draws every polyline as a path, the real axis, and one labeled dot
    per marker (singularities, the axis point 6 x_2, ...).  Identical
    inputs produce byte-identical files.
    """
    if not polylines:
        raise ValueError("no polylines to draw")
    allpts = np.concatenate([np.asarray(p.points, dtype=complex) for p in polylines])
    xs = np.concatenate([allpts.real, [m[0].real for m in markers] or [0.0]])
    ys = np.concatenate([allpts.imag, [m[0].imag for m in markers] or [0.0]])
    x0, x1 = float(xs.min()), float(xs.max())
    y0, y1 = float(ys.min()), float(ys.max())
    pad = 0.05 * max(x1 - x0, y1 - y0, 1e-6)
    x0, x1, y0, y1 = x0 - pad, x1 + pad, y0 - pad, y1 + pad
    width, height = 800.0, 800.0
    sx = width / (x1 - x0)
    sy = height / (y1 - y0)
    s = min(sx, sy)

    def to_px(z: complex) -> tuple[float, float]:
        # SVG y grows downward
        return (z.real - x0) * s, height - (z.imag - y0) * s

    colors = ["#0057b7", "#b70057", "#00875a", "#8a5a00"]
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width:.0f}" height="{height:.0f}" '
        f'viewBox="0 0 {width:.0f} {height:.0f}">',
        f'<rect x="0" y="0" width="{width:.0f}" height="{height:.0f}" fill="#ffffff"/>',
    ]
    ax_a = to_px(complex(x0, 0.0))
    ax_b = to_px(complex(x1, 0.0))
    lines.append(
        f'<line x1="{ax_a[0]:.3f}" y1="{ax_a[1]:.3f}" x2="{ax_b[0]:.3f}" y2="{ax_b[1]:.3f}" '
        'stroke="#888888" stroke-width="1" stroke-dasharray="6,4"/>'
    )
    for i, poly in enumerate(polylines):
        pts = np.asarray(poly.points, dtype=complex)
        if pts.size > 4000:
            stride = pts.size // 4000 + 1
            pts = np.concatenate([pts[::stride], pts[-1:]])
        coords = " L ".join(f"{to_px(z)[0]:.3f} {to_px(z)[1]:.3f}" for z in pts)
        lines.append(
            f'<path d="M {coords}" fill="none" '
            f'stroke="{colors[i % len(colors)]}" stroke-width="1.5"/>'
        )
    for z, label in markers:
        px, py = to_px(complex(z))
        lines.append(f'<circle cx="{px:.3f}" cy="{py:.3f}" r="4" fill="#d62800"/>')
        lines.append(
            f'<text x="{px + 6:.3f}" y="{py - 6:.3f}" font-size="14" '
            f'font-family="monospace" fill="#202020">{label}</text>'
        )
    lines.append("</svg>")
    with open(output_path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


def write_polylines_csv(polylines: list[TrajectoryPolyline], output_path) -> None:
    """Dump polyline samples as CSV rows (index, re, im); index resets per polyline."""
    with open(output_path, "w", encoding="utf-8") as fh:
        fh.write("index,re,im\n")
        for poly in polylines:
            for i, z in enumerate(np.asarray(poly.points, dtype=complex)):
                fh.write(f"{i},{float(z.real)!r},{float(z.imag)!r}\n")
