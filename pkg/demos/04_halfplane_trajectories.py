"""Half-plane geometry of the lam = 2 quadratic differential.

For Re a_2 > 0, Im a_2 != 0 the differential
Q(xi) d xi^2 = -(-3 a_2^2 + a_2 xi + xi^2) d xi^2 / xi has Im Q = 0 on
the real axis only at xi = 6 Re a_2, where Re Q < 0.  The critical
trajectory leaving the origin pole therefore never crosses the axis: it
stays in one half plane.  This script reports the sign data, traces the
trajectory, and draws the picture into demos/out/.
"""

from pathlib import Path


from zalcmanlab.quaddiff import (
    QuadDiffT1,
    critical_points,
    emit_svg,
    half_plane_check,
    origin_trajectory_angle,
    real_axis_report,
    trace_from_origin,
    write_polylines_csv,
    zero_trajectory_angles,
)

OUT = Path(__file__).resolve().parent / "out"
OUT.mkdir(exist_ok=True)

for a2 in (1 + 1j, 1 - 0.5j, 0.4 + 0.9j):
    qd = QuadDiffT1(a2)
    xi_star, slope, re_star = real_axis_report(qd)
    pts = critical_points(qd)
    print(f"=== a2 = {a2} ===")
    print(f"  zeros of Q: {pts.zeros[0]:.4f}, {pts.zeros[1]:.4f}; "
          f"simple pole at 0; order-{pts.infinity_pole_order} pole at infinity")
    print(f"  Im Q vanishes on the real axis only at xi* = {xi_star}")
    print(f"  Re Q(xi*) = {re_star:.6f} < 0  (identity residual {slope:.2e})")
    print(f"  trajectory ray into the origin: angle {origin_trajectory_angle(qd):+.4f}")
    angles = ", ".join(f"{a:+.4f}" for a in zero_trajectory_angles(qd, pts.zeros[0]))
    print(f"  directions leaving the first zero (2pi/3 apart): {angles}")

    poly = trace_from_origin(qd)
    crossings, verdict = half_plane_check([poly], tol=1e-3 * abs(a2))
    side = "lower" if a2.imag > 0 else "upper"
    print(f"  traced {poly.points.size} points, ended: {poly.termination_reason.value}")
    print(f"  axis crossings away from the origin: {crossings}  ->  verdict {verdict}")
    print(f"  (the curve lives in the {side} half plane)")

    tag = f"{a2.real:g}_{a2.imag:g}".replace("-", "m").replace(".", "p")
    svg_path = OUT / f"trajectory_{tag}.svg"
    csv_path = OUT / f"trajectory_{tag}.csv"
    markers = [
        (pts.zeros[0], "zero"),
        (pts.zeros[1], "zero"),
        (0j, "pole"),
        (complex(xi_star, 0.0), "6*x2"),
    ]
    emit_svg([poly], markers, svg_path)
    write_polylines_csv([poly], csv_path)
    print(f"  wrote {svg_path.name} and {csv_path.name}\n")

print(f"pictures and polylines are under {OUT}")
