"""Differential-equation data for extremal coefficient candidates.

A candidate maximizing the real part of a coefficient functional J over
normalized univalent maps satisfies a Schaeffer-Spencer differential
equation.  For a functional of the top coefficient index n the data are

    A_v = sum_{k=v}^{n}   a_k^(v) * J_k          (v = 2..n)
    B_v = sum_{k=1}^{v}   k * a_k * J_{n+k-v}    (v = 1..n-1)
    B   = sum_{k=2}^{n}   (k-1) * a_k * J_k

where a_k^(v) are the coefficients of f(z)^v and J_k the Wirtinger
gradient entries.  For J = a_4 - lam*a_2*a_3 the right-hand side of the
equation is a reciprocal Laurent polynomial of degrees -3..3,

    (1/z^3) * (1 + P z + Q z^2 + R z^3 + S z^4 + T z^5 + z^6),

    P = (2-lam) a_2,  Q = (3-lam) a_3 - 2 lam a_2^2,  R = 3 (a_4 - lam a_2 a_3),
    S = conj(Q),      T = conj(P).

The slit tip of an extremal candidate forces a double zero E on |z|=1 of
the degree-6 numerator, so it factors as (z-E)^2 (z^4 + D z^3 + C z^2 +
B z + A).  The quartic tail is stored as q = [A, B, C, D]; these letters
are unrelated to the Schaeffer-Spencer A_v/B_v above.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .families import CoefficientVector
from .powerseries import power


@dataclass
class SchifferData:
    """Schaeffer-Spencer data: A[v-2] = A_v, Bv[v-1] = B_v, scalar B."""

    A: np.ndarray
    Bv: np.ndarray
    B: complex


@dataclass
class LaurentPoly:
    """Finite Laurent polynomial; coeffs[i] is the degree low_degree+i term."""

    low_degree: int
    coeffs: np.ndarray

    def __post_init__(self) -> None:
        self.coeffs = np.asarray(self.coeffs, dtype=complex)
        if self.coeffs.ndim != 1 or self.coeffs.size == 0:
            raise ValueError("coeffs must be a nonempty 1-d array")

    @property
    def high_degree(self) -> int:
        return self.low_degree + self.coeffs.size - 1

    def coefficient(self, k: int) -> complex:
        if not self.low_degree <= k <= self.high_degree:
            raise ValueError(f"degree {k} outside {self.low_degree}..{self.high_degree}")
        return complex(self.coeffs[k - self.low_degree])


@dataclass
class FactorizedG:
    """Double-zero factorization (z-E)^2 (z^4 + D z^3 + C z^2 + B z + A).

    q holds the quartic tail as [A, B, C, D] (constant term first);
    residual is the worst of |p(E)|, |p'(E)| and the deflation remainders.
    """

    E: complex
    q: np.ndarray
    residual: float


class NoDoubleZeroError(ValueError):
    """The degree-6 numerator has no unimodular double zero; the input is
    not extremal-shaped.  Carries diagnostics for reporting."""

    def __init__(self, message: str, roots=None, best_residual=None):
        super().__init__(message)
        self.roots = roots
        self.best_residual = best_residual


def schaeffer_spencer(
    grad: list[complex] | np.ndarray, f: CoefficientVector, n: int
) -> SchifferData:
    """Assemble (A_v, B_v, B) from a gradient list (J_2..J_n) and candidate f.

    The powers f^v are computed by truncated convolution, not from any
    closed form, so this is an independent route to the same data.
    """
    grad = np.asarray(grad, dtype=complex)
    if grad.shape != (n - 1,):
        raise ValueError(f"gradient list must have length n-1={n - 1}, got {grad.shape}")
    if f.order < n:
        raise ValueError(f"need coefficient order >= {n}, got {f.order}")

    def J(k: int) -> complex:
        # gradient entries are indexed 2..n
        return complex(grad[k - 2])

    series = f.series()
    A = np.zeros(n - 1, dtype=complex)
    for v in range(2, n + 1):
        fv = power(series, v)
        A[v - 2] = sum(fv.coefficient(k) * J(k) for k in range(v, n + 1))

    Bv = np.zeros(n - 1, dtype=complex)
    for v in range(1, n):
        Bv[v - 1] = sum(k * f.coefficient(k) * J(n + k - v) for k in range(1, v + 1))

    B = sum((k - 1) * f.coefficient(k) * J(k) for k in range(2, n + 1))
    return SchifferData(A=A, Bv=Bv, B=complex(B))


def rhs_polynomial(lam: float, f: CoefficientVector) -> LaurentPoly:
    """Right-hand side of the extremal differential equation, degrees -3..3.

    Coefficients are [1, P, Q, R, S, T, 1] with the identities quoted in
    the module docstring.  The center term R = 3(a_4 - lam a_2 a_3) is real
    only for candidates whose functional value is real; see
    canonical_rotation for the normalization that achieves this.
    """
    if f.order < 4:
        raise ValueError(f"need order >= 4, got {f.order}")
    a2, a3, a4 = f.a[1], f.a[2], f.a[3]
    P = (2 - lam) * a2
    Q = (3 - lam) * a3 - 2 * lam * a2 * a2
    R = 3 * (a4 - lam * a2 * a3)
    coeffs = np.array([1.0, P, Q, R, np.conj(Q), np.conj(P), 1.0], dtype=complex)
    return LaurentPoly(low_degree=-3, coeffs=coeffs)


def canonical_rotation(f: CoefficientVector, lam: float) -> tuple[CoefficientVector, float]:
    """Minimal rotation of f making a_4 - lam*a_2*a_3 real.

    The extremal differential equation presumes a candidate extremal for
    the real part, whose functional value is real.  Rotating f by delta
    multiplies the value by e^{3 i delta}; the smallest |delta| with
    3*delta + arg(value) in pi*Z is returned along with the rotated
    vector.  A value that is already real (or zero) leaves f unchanged.
    """
    if f.order < 4:
        raise ValueError(f"need order >= 4, got {f.order}")
    value = f.a[3] - lam * f.a[1] * f.a[2]
    if abs(value) < 1e-14:
        return f, 0.0
    psi = float(np.angle(value))
    k = round(psi / np.pi)
    delta = (k * np.pi - psi) / 3.0
    if delta == 0.0:
        return f, 0.0
    return f.rotated(delta), delta


def check_reciprocal_symmetry(g: LaurentPoly) -> float:
    """max_k |c_k - conj(c_{-k})|; zero iff g(z) = conj(g(1/conj(z)))."""
    if g.low_degree != -g.high_degree:
        raise ValueError(
            f"degree range {g.low_degree}..{g.high_degree} is not symmetric about 0"
        )
    rev = np.conj(g.coeffs[::-1])
    return float(np.max(np.abs(g.coeffs - rev)))


def _as_monic_numerator(g: LaurentPoly) -> np.ndarray:
    """Ascending degree-6 numerator coefficients of the -3..3 right-hand side."""
    if g.low_degree != -3 or g.coeffs.size != 7:
        raise ValueError("expected the degree -3..3 right-hand-side form")
    if abs(g.coeffs[0] - 1) > 1e-9 or abs(g.coeffs[6] - 1) > 1e-9:
        raise ValueError("expected c_{-3} == c_{3} == 1")
    return g.coeffs.copy()


def _deflate(desc: np.ndarray, root: complex) -> tuple[np.ndarray, complex]:
    """Synthetic division of a descending-coefficient polynomial by (z - root)."""
    out = np.empty(desc.size - 1, dtype=complex)
    acc = desc[0]
    for i in range(1, desc.size):
        out[i - 1] = acc
        acc = desc[i] + acc * root
    return out, acc


def double_root_fit(
    g: LaurentPoly,
    cluster_tol: float = 1e-4,
    threshold: float = 1e-8,
    unimodular_tol: float = 1e-6,
) -> FactorizedG:
    """Locate the unimodular double zero E of the degree-6 numerator.

    Strategy: companion-matrix roots, pair clustering at cluster_tol,
    cluster selection nearest |z|=1, then a Gauss-Newton polish on the
    joint system (p(E), p'(E)) = (0, 0).  Raises NoDoubleZeroError when
    no pair clusters, when several unimodular clusters compete (two slit
    tips cannot be resolved here), or when the polished residual exceeds
    threshold.
    """
    asc = _as_monic_numerator(g)
    desc = asc[::-1]
    dp = np.polyder(desc)
    roots = np.roots(desc)

    pairs = []
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            d = abs(roots[i] - roots[j])
            if d < cluster_tol:
                pairs.append((d, 0.5 * (roots[i] + roots[j])))
    if not pairs:
        dmin = min(
            abs(roots[i] - roots[j]) for i in range(len(roots)) for j in range(i + 1, len(roots))
        )
        raise NoDoubleZeroError(
            f"no root pair within {cluster_tol:g} (closest distance {dmin:.3g})",
            roots=roots,
            best_residual=dmin,
        )

    unimodular = [p for p in pairs if abs(abs(p[1]) - 1) <= 100 * cluster_tol]
    if len(unimodular) > 1:
        raise NoDoubleZeroError(
            f"{len(unimodular)} unimodular double-zero candidates; "
            "input appears to have more than one slit tip",
            roots=roots,
        )
    candidates = unimodular if unimodular else pairs
    E = min(candidates, key=lambda p: abs(abs(p[1]) - 1))[1]

    # Gauss-Newton on F(E) = (p(E), p'(E)); J = (p'(E), p''(E))
    dpp = np.polyder(dp)
    for _ in range(60):
        F0 = np.polyval(desc, E)
        F1 = np.polyval(dp, E)
        J0 = F1
        J1 = np.polyval(dpp, E)
        denom = (np.conj(J0) * J0 + np.conj(J1) * J1).real
        if denom == 0.0:
            break
        step = (np.conj(J0) * F0 + np.conj(J1) * F1) / denom
        E = E - step
        if abs(step) < 1e-15:
            break

    pE = abs(np.polyval(desc, E))
    dpE = abs(np.polyval(dp, E))
    q1, rem1 = _deflate(desc, E)
    q2, rem2 = _deflate(q1, E)
    residual = float(max(pE, dpE, abs(rem1), abs(rem2)))

    if abs(abs(E) - 1) > unimodular_tol:
        raise NoDoubleZeroError(
            f"double zero at |E|={abs(E):.6g} is not unimodular",
            roots=roots,
            best_residual=residual,
        )
    if residual > threshold:
        raise NoDoubleZeroError(
            f"double-zero residual {residual:.3g} exceeds threshold {threshold:g}",
            roots=roots,
            best_residual=residual,
        )

    # q2 is descending z^4..z^0; store ascending [A, B, C, D] without z^4
    quartic = q2[::-1]
    return FactorizedG(E=complex(E), q=quartic[:4].copy(), residual=residual)


def matching_residuals(
    fac: FactorizedG, f: CoefficientVector, lam: float = 3.0
) -> np.ndarray:
    """Residuals of the five coefficient-matching identities.

    Expanding (z-E)^2 (z^4 + D z^3 + C z^2 + B z + A) and comparing with
    the right-hand side gives, degree by degree (z^1..z^5),

        B E^2 - 2 A E     = P
        A - 2 E B + E^2 C = Q
        B - 2 E C + E^2 D = R
        C - 2 E D + E^2   = S
        D - 2 E           = T

    with P..T evaluated from f at the given lam (at lam=3 these read
    -a_2, -6 a_2^2, 3(a_4 - 3 a_2 a_3), -6 conj(a_2^2), -conj(a_2)).
    """
    if f.order < 4:
        raise ValueError(f"need order >= 4, got {f.order}")
    a2, a3, a4 = f.a[1], f.a[2], f.a[3]
    P = (2 - lam) * a2
    Q = (3 - lam) * a3 - 2 * lam * a2 * a2
    R = 3 * (a4 - lam * a2 * a3)
    S = np.conj(Q)
    T = np.conj(P)
    A, B, C, D = fac.q
    E = fac.E
    lhs = np.array(
        [
            B * E * E - 2 * A * E,
            A - 2 * E * B + E * E * C,
            B - 2 * E * C + E * E * D,
            C - 2 * E * D + E * E,
            D - 2 * E,
        ],
        dtype=complex,
    )
    rhs = np.array([P, Q, R, S, T], dtype=complex)
    return np.abs(lhs - rhs)


def relation_check(fac: FactorizedG) -> tuple[float, float]:
    """Residuals of the reciprocal-symmetry relations D = conj(B)*A and C = conj(C)*A."""
    A, B, C, D = fac.q
    return (
        float(abs(D - np.conj(B) * A)),
        float(abs(C - np.conj(C) * A)),
    )
