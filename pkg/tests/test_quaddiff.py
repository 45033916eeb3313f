import math

import numpy as np
import pytest

from zalcmanlab.quaddiff import (
    QuadDiffT1,
    TerminationReason,
    TrajectoryPolyline,
    critical_points,
    emit_svg,
    half_plane_check,
    origin_trajectory_angle,
    q_of_xi,
    real_axis_report,
    trace_from_origin,
    trace_trajectory,
    write_polylines_csv,
    zero_trajectory_angles,
)

SQRT13 = math.sqrt(13.0)


def random_admissible(rng):
    x2 = rng.uniform(0.02, 2.0)
    y2 = rng.uniform(-1.0, 1.0)
    while abs(y2) < 1e-3:
        y2 = rng.uniform(-1.0, 1.0)
    return complex(x2, y2)


# ------------------------------------------------------------- evaluation


def test_q_value_plain_parameter():
    assert q_of_xi(1.0, 1.0) == pytest.approx(1.0)


def test_q_vanishes_at_quadratic_roots():
    a2 = 0.8 + 0.3j
    for sign in (+1, -1):
        root = a2 * (-1 + sign * SQRT13) / 2
        assert abs(q_of_xi(a2, root)) < 1e-12


def test_q_pole_at_origin():
    with pytest.raises(ValueError, match="pole"):
        q_of_xi(QuadDiffT1(1 + 1j), 0.0)


def test_hypothesis_validation():
    with pytest.raises(ValueError, match="Re a2"):
        QuadDiffT1(-1 + 1j)
    with pytest.raises(ValueError, match="Im a2"):
        QuadDiffT1(1 + 0j)


# --------------------------------------------------------- real-axis signs


def test_real_axis_report_closed_forms():
    xi_star, slope, re_star = real_axis_report(QuadDiffT1(1 + 1j))
    assert xi_star == 6
    assert slope < 1e-12
    assert re_star == pytest.approx(-7)

    xi_star, _, re_star = real_axis_report(QuadDiffT1(2 + 1j))
    assert xi_star == 12
    assert re_star == pytest.approx(-159 / 12)


def test_imaginary_part_identity_on_random_parameters():
    rng = np.random.default_rng(5)
    for _ in range(50):
        qd = QuadDiffT1(random_admissible(rng))
        _, slope, re_star = real_axis_report(qd)
        assert slope < 1e-12
        assert re_star < 0
        direct = q_of_xi(qd, 6 * qd.a2.real).real
        assert direct == pytest.approx(re_star, abs=1e-12 * max(1, abs(re_star)))


def test_single_sign_change_on_real_axis():
    rng = np.random.default_rng(17)
    grid = np.linspace(-20, 20, 4001)
    grid = grid[grid != 0]
    for _ in range(50):
        qd = QuadDiffT1(random_admissible(rng))
        im = np.array([q_of_xi(qd, x).imag for x in grid])
        pos = im[grid > 0]
        neg = im[grid < 0]
        changes_pos = int(np.sum(np.sign(pos[1:]) * np.sign(pos[:-1]) < 0))
        changes_neg = int(np.sum(np.sign(neg[1:]) * np.sign(neg[:-1]) < 0))
        xi_star = 6 * qd.a2.real
        if xi_star < 19.9:  # the vanishing point sits inside the positive grid
            assert changes_pos == 1
        assert changes_neg == 0
        # the sign change brackets xi_star
        if changes_pos == 1:
            posg = grid[grid > 0]
            idx = np.where(np.sign(pos[1:]) * np.sign(pos[:-1]) < 0)[0][0]
            assert posg[idx] <= xi_star <= posg[idx + 1]


# ------------------------------------------------------------ singularities


def test_critical_points_values():
    pts = critical_points(1.0)
    assert pts.zeros[0] == pytest.approx((-1 + SQRT13) / 2)
    assert pts.zeros[1] == pytest.approx((-1 - SQRT13) / 2)
    assert pts.zeros[0] == pytest.approx(1.302775637731995)
    assert pts.zeros[1] == pytest.approx(-2.302775637731995)
    assert pts.simple_pole == 0
    assert pts.infinity_pole_order == 5

    scaled = critical_points(1j)
    assert scaled.zeros[0] == pytest.approx(1j * (-1 + SQRT13) / 2)
    for z in scaled.zeros:
        assert abs(q_of_xi(1j, z)) < 1e-10


def test_origin_direction_is_unique_positivity_ray():
    a2 = 1 + 0.7j
    phi0 = origin_trajectory_angle(a2)
    eps = 1e-6
    good = 0
    for phi in np.linspace(-math.pi, math.pi, 360, endpoint=False):
        xi = eps * np.exp(1j * phi)
        val = q_of_xi(a2, xi) * np.exp(2j * phi)
        if abs(np.angle(val)) < math.pi / 360:
            good += 1
            assert abs(np.exp(1j * phi) - np.exp(1j * phi0)) < 0.05
    assert good >= 1


def test_zero_directions_are_equally_spaced():
    a2 = 1 + 0.5j
    z = critical_points(a2).zeros[0]
    angles = zero_trajectory_angles(a2, z)
    assert len(angles) == 3
    diffs = np.diff(angles)
    assert np.allclose(diffs, 2 * math.pi / 3, atol=1e-9)


# ----------------------------------------------------------------- tracing


def test_trace_stays_on_trajectory():
    qd = QuadDiffT1(1 + 0.5j)
    poly = trace_from_origin(qd)
    pts = poly.points
    assert poly.termination_reason in (
        TerminationReason.REACHED_ZERO,
        TerminationReason.ESCAPED_RADIUS,
    )
    mid = 0.5 * (pts[1:] + pts[:-1])
    dxi = pts[1:] - pts[:-1]
    vals = np.array([q_of_xi(qd, m) for m in mid]) * dxi * dxi
    ratio = np.abs(vals.imag) / np.abs(vals)
    assert ratio.max() < 1e-3
    assert np.max(np.abs(dxi)) <= poly.step_bound * (1 + 1e-9)


def test_trace_rejects_singular_start():
    qd = QuadDiffT1(1 + 0.5j)
    with pytest.raises(ValueError, match="singularity"):
        trace_trajectory(qd, 0.0)


def test_trace_into_pole_from_unique_direction():
    # approaching along the trajectory ray reaches the pole; starting on the
    # same ray with outward orientation does not return to it
    qd = QuadDiffT1(0.9 + 0.6j)
    scale = abs(qd.a2)
    phi0 = origin_trajectory_angle(qd)
    start = 0.05 * scale * np.exp(1j * phi0)
    d0 = np.exp(-0.5j * np.angle(q_of_xi(qd, start)))
    inward = -np.exp(1j * phi0)
    orientation = 1 if (d0.real * inward.real + d0.imag * inward.imag) >= 0 else -1
    poly = trace_trajectory(qd, start, orientation=orientation, ds=1e-3 * scale)
    assert poly.termination_reason == TerminationReason.REACHED_POLE
    outward_poly = trace_trajectory(qd, start, orientation=-orientation, ds=1e-3 * scale)
    assert outward_poly.termination_reason != TerminationReason.REACHED_POLE


def test_trace_reversibility():
    qd = QuadDiffT1(1.1 + 0.4j)
    scale = abs(qd.a2)
    ds = 1e-3 * scale
    forward = trace_from_origin(qd, ds=ds)
    # retrace from the far end back along the same curve
    end = forward.points[-1]
    prev = forward.points[-2]
    back_dir = (prev - end) / abs(prev - end)
    d0 = np.exp(-0.5j * np.angle(q_of_xi(qd, end)))
    orientation = 1 if (d0.real * back_dir.real + d0.imag * back_dir.imag) >= 0 else -1
    backward = trace_trajectory(qd, end, orientation=orientation, ds=ds,
                                max_steps=len(forward.points) + 100)
    # one-sided Hausdorff distance from backward points to the forward curve
    sample = backward.points[:: max(1, len(backward.points) // 200)]
    dist = max(np.min(np.abs(forward.points - p)) for p in sample)
    assert dist < 10 * ds


def test_w_plane_form_agrees_under_inversion():
    rng = np.random.default_rng(9)
    a2 = 1 + 0.5j
    for _ in range(50):
        xi = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
        if abs(xi) < 0.1:
            continue
        w = 1 / xi
        q_star = -(-3 * a2 * a2 * w * w + a2 * w + 1) / w**5
        pulled_back = q_star * (1 / xi**2) ** 2
        assert abs(pulled_back - q_of_xi(a2, xi)) < 1e-10 * max(1, abs(pulled_back))


# -------------------------------------------------------------- half plane


def test_half_plane_verdicts():
    for a2 in (1 + 0.5j, 1 - 0.5j):
        qd = QuadDiffT1(a2)
        poly = trace_from_origin(qd)
        crossings, verdict = half_plane_check([poly], tol=1e-3 * abs(a2))
        assert crossings == 0
        assert verdict
        # conjugate parameters trace into opposite half planes
        far = poly.points[np.abs(poly.points) > 0.1]
        assert np.all(far.imag < 0) if a2.imag > 0 else np.all(far.imag > 0)


def test_half_plane_detects_synthetic_crossing():
    pts = np.array([3 + 1j, 3 + 0.5j, 3 - 0.5j, 3 - 1j])
    poly = TrajectoryPolyline(points=pts, termination_reason=TerminationReason.STEP_LIMIT)
    crossings, verdict = half_plane_check([poly], tol=1e-3)
    assert crossings >= 1
    assert not verdict


# ------------------------------------------------------------------ output


def test_svg_structure_and_determinism(tmp_path):
    qd = QuadDiffT1(1 + 0.5j)
    p1 = trace_from_origin(qd, ds=5e-3)
    p2 = TrajectoryPolyline(
        points=p1.points.conj(), termination_reason=p1.termination_reason
    )
    out1 = tmp_path / "a.svg"
    out2 = tmp_path / "b.svg"
    markers = [(0j, "pole"), (complex(6 * qd.a2.real, 0), "6*x2")]
    emit_svg([p1, p2], markers, out1)
    emit_svg([p1, p2], markers, out2)
    text = out1.read_text()
    assert text.count("<path") == 2
    assert "6*x2" in text
    assert out1.read_bytes() == out2.read_bytes()


def test_svg_rejects_empty_input(tmp_path):
    with pytest.raises(ValueError):
        emit_svg([], [], tmp_path / "x.svg")


def test_csv_dump(tmp_path):
    poly = TrajectoryPolyline(
        points=np.array([1 + 1j, 2 + 2j]),
        termination_reason=TerminationReason.STEP_LIMIT,
    )
    out = tmp_path / "poly.csv"
    write_polylines_csv([poly], out)
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "index,re,im"
    assert lines[1].startswith("0,1.0,1.0")
    assert len(lines) == 3
