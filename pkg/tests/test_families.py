import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from zalcmanlab.families import CoefficientVector, koebe_rotation


def koebe_series_oracle(theta, N):
    """Expand z/(1 - u z)^2 by squaring the geometric series, u = e^{i theta}."""
    u = np.exp(1j * theta)
    geom = u ** np.arange(N)           # (1 - u z)^{-1} coefficients
    sq = np.convolve(geom, geom)[:N]   # (1 - u z)^{-2}
    return sq                          # a_n = coefficient of z^{n-1}, n = 1..N


def test_koebe_theta_zero():
    f = koebe_rotation(0.0, 4)
    assert np.allclose(f.a, [1, 2, 3, 4])


def test_koebe_theta_pi_alternates():
    f = koebe_rotation(np.pi, 3)
    assert np.max(np.abs(f.a - np.array([1, -2, 3]))) < 1e-12


def test_koebe_theta_pi_over_three_against_expansion():
    theta = np.pi / 3
    f = koebe_rotation(theta, 4)
    assert np.max(np.abs(f.a - koebe_series_oracle(theta, 4))) < 1e-12
    assert f.a[3] == pytest.approx(-4)


@given(st.floats(-10, 10), st.integers(2, 12))
def test_moduli_saturate_coefficient_bound(theta, N):
    f = koebe_rotation(theta, N)
    assert np.max(np.abs(np.abs(f.a) - np.arange(1, N + 1))) < 1e-10


@given(st.floats(-6, 6), st.integers(2, 10))
def test_two_pi_periodicity(theta, N):
    f1 = koebe_rotation(theta, N)
    f2 = koebe_rotation(theta + 2 * np.pi, N)
    assert np.max(np.abs(f1.a - f2.a)) < 1e-12


def test_rejects_small_order():
    with pytest.raises(ValueError):
        koebe_rotation(0.0, 1)


def test_coefficient_vector_validation():
    with pytest.raises(ValueError, match="a_1"):
        CoefficientVector(3, np.array([2.0, 0, 0]))
    with pytest.raises(ValueError):
        CoefficientVector(3, np.array([1.0, 0]))
    f = CoefficientVector(3, np.array([1.0, 1j, -2]))
    assert f.coefficient(2) == 1j
    with pytest.raises(ValueError):
        f.coefficient(0)


def test_rotation_shifts_phases():
    f = koebe_rotation(0.3, 5)
    g = f.rotated(0.4)
    h = koebe_rotation(0.7, 5)
    assert np.max(np.abs(g.a - h.a)) < 1e-12
