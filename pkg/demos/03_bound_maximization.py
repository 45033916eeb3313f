"""The trigonometric maximization behind |3 a_2 a_3 - a_4| <= 14.

The matching identities reduce the real part of 3 a_2 a_3 - a_4 to
(2/3) G(R, theta, phi) with G = -6 R^2 cos(2 phi - theta)
+ R cos(2 theta - phi) + cos(3 theta) on the extremal manifold.  The
interior critical points sit at R = 1/12 on phi = -theta; the boundary
R = 2 wins with G = 21, giving the coefficient bound 14.
"""

import numpy as np

from zalcmanlab.extremal_algebra import (
    g_critical_points,
    g_function,
    g_on_manifold,
    g_partials,
    maximize_two_stage,
)

print("=== interior critical set ===")
crit = g_critical_points()[0]
print(f"R = {crit.R:.10f}  on  {crit.constraint}")
for theta in (0.0, 0.7, 2.1):
    dR, dphi = g_partials(crit.R, theta, -theta)
    print(f"  partials at theta={theta}: dG/dR={dR:+.2e}  dG/dphi={dphi:+.2e}")
print(f"interior value: G(1/12, 0, 0) = {g_function(1/12, 0.0, 0.0):.10f} = 25/24")
print("(the interior value exceeds 1 slightly; it is reported, not assumed)\n")

print("=== manifold restriction and the boundary win ===")
for R in (0.05, 1 / 12, 0.5, 1.0, 2.0):
    print(f"  R={R:8.5f}:  (-6R^2+R+1) = {-6 * R * R + R + 1:+9.5f}  "
          f"best over phi = {abs(-6 * R * R + R + 1):.5f}")
print(f"boundary winner: G(2, -pi/3, pi/3) = {g_function(2.0, -np.pi/3, np.pi/3):.10f}\n")

print("=== two-stage maximization ===")
result = maximize_two_stage()
print(f"g_max = {result.g_max}  at R = {result.argmax_R}, phi = {result.argmax_phi:.6f}")
print(f"coefficient bound = (2/3) * g_max = {result.bound}")
print(f"interior candidate (reported): {result.interior_value:.6f} at R = {result.interior_R:.6f}")
print(f"unconstrained grid max (diagnostic only, off the extremal manifold): "
      f"{result.unconstrained_grid_max:.4f}")

print("\n=== dense manifold scan never exceeds 21 ===")
Rs = np.linspace(2 / 2000, 2.0, 2000)
phis = np.linspace(0.0, 2 * np.pi, 2000, endpoint=False)
grid = np.outer(-6 * Rs * Rs + Rs + 1, np.cos(3 * phis))
print(f"max over 2000x2000 grid: {grid.max():.12f} <= 21")

scan = max(g_on_manifold(R, p) for R in Rs[::40] for p in phis[::40])
print(f"coarse g_on_manifold cross-check: {scan:.6f}")
