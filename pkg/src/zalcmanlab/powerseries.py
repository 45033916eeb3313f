"""Truncated complex power series for maps that fix the origin.

A series here represents z -> sum_{k=1}^{N} c_k z^k.  The constant term is
identically zero and is not stored: ``coeffs[k-1]`` is the coefficient of
``z^k``.  The truncation order N is fixed at construction and every
operation discards degrees above N, so convolution tails are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass
class TruncatedSeries:
    """Coefficients c_1..c_N of a series vanishing at the origin."""

    order: int
    coeffs: np.ndarray

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError("truncation order must be >= 1")
        self.coeffs = np.asarray(self.coeffs, dtype=complex)
        if self.coeffs.shape != (self.order,):
            raise ValueError(
                f"expected {self.order} coefficients, got shape {self.coeffs.shape}"
            )

    def coefficient(self, k: int) -> complex:
        """Coefficient of z^k; k=0 returns the implicit constant 0."""
        if k == 0:
            return 0j
        if not 1 <= k <= self.order:
            raise ValueError(f"degree {k} outside 1..{self.order}")
        return complex(self.coeffs[k - 1])

    def copy(self) -> "TruncatedSeries":
        return TruncatedSeries(self.order, self.coeffs.copy())


def multiply(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated to the common order.

    Both factors vanish at the origin, so the product has no z^1 term and
    the result coefficient of z^k is sum_{i+j=k} a_i b_j.
    """
    if a.order != b.order:
        raise ValueError(f"order mismatch: {a.order} != {b.order}")
    n = a.order
    out = np.zeros(n, dtype=complex)
    if n >= 2:
        # full convolution covers degrees 2..2n; keep 2..n
        full = np.convolve(a.coeffs, b.coeffs)
        out[1:] = full[: n - 1]
    return TruncatedSeries(n, out)


def power(f: TruncatedSeries, v: int) -> TruncatedSeries:
    """Coefficients of f(z)^v for a normalized series (c_1 == 1).

    The result vanishes to order v and its z^v coefficient equals 1
    exactly: the lowest convolution entry is a pure product of ones.
    """
    if f.coefficient(1) != 1:
        raise ValueError("power expects a normalized series with c_1 == 1")
    if not 1 <= v <= f.order:
        raise ValueError(f"exponent {v} outside 1..{f.order}")
    result = f.copy()
    for _ in range(v - 1):
        result = multiply(result, f)
    return result
