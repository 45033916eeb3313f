"""Closed-form coefficient generators for known univalent families.

Only the Koebe function and its rotations are generated here; they
saturate the coefficient bound |a_n| <= n and are the expected extremal
candidates for the functionals evaluated by this package.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .powerseries import TruncatedSeries


@dataclass
class CoefficientVector:
    """Normalized Taylor coefficients a_1=1, a_2..a_N of a disk map."""

    order: int
    a: np.ndarray

    def __post_init__(self) -> None:
        if self.order < 2:
            raise ValueError("coefficient vector needs order >= 2")
        self.a = np.asarray(self.a, dtype=complex)
        if self.a.shape != (self.order,):
            raise ValueError(f"expected {self.order} coefficients, got shape {self.a.shape}")
        if self.a[0] != 1:
            raise ValueError("leading coefficient a_1 must equal 1 exactly")

    def coefficient(self, n: int) -> complex:
        """a_n for 1 <= n <= order."""
        if not 1 <= n <= self.order:
            raise ValueError(f"index {n} outside 1..{self.order}")
        return complex(self.a[n - 1])

    def series(self) -> TruncatedSeries:
        return TruncatedSeries(self.order, self.a.copy())

    def rotated(self, delta: float) -> "CoefficientVector":
        """Coefficients of e^{-i delta} f(e^{i delta} z): a_n -> a_n e^{i(n-1)delta}."""
        n = np.arange(self.order)
        out = self.a * np.exp(1j * n * delta)
        out[0] = 1.0
        return CoefficientVector(self.order, out)


def koebe_rotation(theta: float, N: int) -> CoefficientVector:
    """Coefficients of z/(1 - e^{i theta} z)^2, namely a_n = n e^{i(n-1)theta}."""
    if N < 2:
        raise ValueError("need N >= 2")
    n = np.arange(1, N + 1)
    a = n * np.exp(1j * (n - 1) * theta)
    a[0] = 1.0
    return CoefficientVector(N, a)
