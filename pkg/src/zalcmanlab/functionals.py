"""Generalized Zalcman coefficient functionals and their thresholds.

The functional of a normalized univalent candidate f is

    lam * a_n * a_m - a_{n+m-1},

whose conjectured modulus bound is lam*n*m - n - m + 1.  Koebe rotations
attain the bound whenever it holds.  Two lambda thresholds matter:
(n+m-1)/(n*m), below which the bound is negative and cannot hold, and
n*m/(n+m-1), above which a certified bound at one lambda extends upward
by the triangle inequality together with |a_k| <= k.
"""

from __future__ import annotations

from dataclasses import dataclass

from .families import CoefficientVector


@dataclass(frozen=True)
class ZalcmanSpec:
    """The triple (lam, n, m) selecting a functional lam*a_n*a_m - a_{n+m-1}."""

    lam: float
    n: int
    m: int

    def __post_init__(self) -> None:
        if self.n < 2 or self.m < 2:
            raise ValueError("need n >= 2 and m >= 2")
        if self.lam <= 0:
            raise ValueError("lam must be positive")


@dataclass(frozen=True)
class FunctionalGradient:
    """Wirtinger derivatives of a_4 - lam*a_2*a_3 with respect to a_2, a_3, a_4."""

    J2: complex
    J3: complex
    J4: complex

    def as_list(self) -> list[complex]:
        """Gradient entries for coefficient indices 2, 3, 4."""
        return [self.J2, self.J3, self.J4]


def zalcman_value(f: CoefficientVector, spec: ZalcmanSpec) -> complex:
    """lam * a_n * a_m - a_{n+m-1} for the candidate f."""
    top = spec.n + spec.m - 1
    if f.order < top:
        raise ValueError(f"need order >= {top}, got {f.order}")
    a = f.a
    return complex(spec.lam * a[spec.n - 1] * a[spec.m - 1] - a[top - 1])


def zalcman_bound(spec: ZalcmanSpec) -> float:
    """Conjectured modulus bound lam*n*m - n - m + 1."""
    return spec.lam * spec.n * spec.m - spec.n - spec.m + 1


def lambda_thresholds(n: int, m: int) -> tuple[float, float]:
    """(low, mono) thresholds for the pair (n, m).

    low  = (n+m-1)/(n*m): below this the conjectured bound is negative.
    mono = n*m/(n+m-1):  at or above this the bound extends to larger
           lambda once it is known to hold (see extend_bound_by_monotonicity).
    The two constants are distinct and are not merged here.
    """
    if n < 2 or m < 2:
        raise ValueError("need n >= 2 and m >= 2")
    return (n + m - 1) / (n * m), n * m / (n + m - 1)


def extend_bound_by_monotonicity(
    mu: float, lam: float, spec_holds_at_lambda: bool, n: int, m: int
) -> float | None:
    """Certified bound at mu >= lam, or None (a refusal, not an error).

    If |lam*a_n*a_m - a_{n+m-1}| <= lam*n*m - n - m + 1 holds and
    lam >= n*m/(n+m-1), then for mu >= lam

        |mu*a_n*a_m - a_{n+m-1}| <= (mu-lam)*n*m + (lam*n*m - n - m + 1)
                                  = mu*n*m - n - m + 1,

    using |a_n*a_m| <= n*m.  Returns the extended bound; returns None
    when any hypothesis of the chain is not met.
    """
    if n < 2 or m < 2:
        raise ValueError("need n >= 2 and m >= 2")
    if not spec_holds_at_lambda:
        return None
    _, mono = lambda_thresholds(n, m)
    if mu < lam or lam < mono - 1e-12:
        return None
    return mu * n * m - n - m + 1


def gradient(lam: float, f: CoefficientVector) -> FunctionalGradient:
    """Gradient of a_4 - lam*a_2*a_3: (-lam*a_3, -lam*a_2, 1).

    This is the (n, m) = (2, 3) functional written with the opposite sign
    convention; only the sign of the value flips, the modulus is shared.
    """
    if f.order < 4:
        raise ValueError(f"need order >= 4, got {f.order}")
    return FunctionalGradient(
        J2=-lam * f.a[2],
        J3=-lam * f.a[1],
        J4=1.0 + 0j,
    )
