import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from zalcmanlab.powerseries import TruncatedSeries, multiply, power


def brute_force_product(a, b, N):
    """Independent convolution oracle: c_k = sum_{i+j=k} a_i b_j, degrees 1..N."""
    out = np.zeros(N, dtype=complex)
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            if i + j <= N:
                out[i + j - 1] += a[i - 1] * b[j - 1]
    return out


def series(coeffs):
    coeffs = np.asarray(coeffs, dtype=complex)
    return TruncatedSeries(len(coeffs), coeffs)


coeff_box = st.complex_numbers(
    min_magnitude=0, max_magnitude=5, allow_nan=False, allow_infinity=False
)


def normalized_series(min_order=2, max_order=12):
    return st.integers(min_order, max_order).flatmap(
        lambda n: st.lists(coeff_box, min_size=n - 1, max_size=n - 1).map(
            lambda tail: series([1.0] + tail)
        )
    )


def test_monomial_product():
    z = series([1, 0, 0])
    sq = multiply(z, z)
    assert np.allclose(sq.coeffs, [0, 1, 0])


def test_binomial_square():
    f = series([1, 2, 0, 0])
    sq = multiply(f, f)
    assert np.allclose(sq.coeffs, [0, 1, 4, 4])


def test_koebe_square_degree_four():
    koebe = series([1, 2, 3, 4])
    expected = brute_force_product(koebe.coeffs, koebe.coeffs, 4)
    assert expected[3] == 10
    sq = multiply(koebe, koebe)
    assert sq.coefficient(4) == pytest.approx(10)
    assert np.allclose(sq.coeffs, expected)


def test_order_mismatch_rejected():
    with pytest.raises(ValueError, match="order mismatch"):
        multiply(series([1, 0]), series([1, 0, 0]))


def test_power_identity():
    f = series([1, 2 + 1j, -3])
    p = power(f, 1)
    assert np.allclose(p.coeffs, f.coeffs)


def test_power_two_matches_symbolic_forms():
    a2, a3 = 0.3 - 0.7j, 1.5 + 0.2j
    f = series([1, a2, a3, 0.1j])
    sq = power(f, 2)
    assert sq.coefficient(2) == pytest.approx(1)
    assert sq.coefficient(3) == pytest.approx(2 * a2)
    assert sq.coefficient(4) == pytest.approx(a2 * a2 + 2 * a3)


def test_power_three_degree_four_is_three_a2():
    a2 = -0.4 + 0.9j
    f = series([1, a2, 0.5, -0.25j])
    cube = power(f, 3)
    assert cube.coefficient(3) == pytest.approx(1)
    assert cube.coefficient(4) == pytest.approx(3 * a2)


def test_power_rejects_bad_inputs():
    with pytest.raises(ValueError, match="c_1 == 1"):
        power(series([2, 0, 0]), 2)
    with pytest.raises(ValueError, match="outside"):
        power(series([1, 0, 0]), 4)
    with pytest.raises(ValueError, match="outside"):
        power(series([1, 0, 0]), 0)


@given(normalized_series())
def test_power_matches_untruncated_polynomial_power(f):
    # oracle: full polynomial power via numpy convolution, truncated afterwards
    for v in range(1, min(f.order, 4) + 1):
        full = np.array([1.0 + 0j])
        dense = np.concatenate([[0.0], f.coeffs])  # degree 0..N
        for _ in range(v):
            full = np.convolve(full, dense)
        expected = full[1 : f.order + 1]
        got = power(f, v).coeffs
        assert np.max(np.abs(got - expected)) < 1e-12 * max(1.0, np.max(np.abs(expected)))


@given(normalized_series(), st.lists(coeff_box, min_size=11, max_size=11))
def test_multiply_commutative(f, other_tail):
    g = series([1.0] + other_tail[: f.order - 1])
    left = multiply(f, g)
    right = multiply(g, f)
    assert np.max(np.abs(left.coeffs - right.coeffs)) < 1e-12


@given(normalized_series(min_order=3))
def test_multiply_associative(f):
    g = series(np.roll(f.coeffs, 1) + 1)
    h = series(f.coeffs[::-1])
    lhs = multiply(multiply(f, g), h)
    rhs = multiply(f, multiply(g, h))
    scale = max(1.0, float(np.max(np.abs(lhs.coeffs))))
    assert np.max(np.abs(lhs.coeffs - rhs.coeffs)) < 1e-12 * scale


@given(normalized_series())
def test_lowest_power_coefficient_exactly_one(f):
    for v in range(1, min(f.order, 5) + 1):
        p = power(f, v)
        assert p.coefficient(v) == 1
        for k in range(1, v):
            assert p.coefficient(k) == 0


def test_series_validation():
    with pytest.raises(ValueError):
        TruncatedSeries(0, np.array([], dtype=complex))
    with pytest.raises(ValueError):
        TruncatedSeries(3, np.array([1.0, 2.0]))
    s = series([1, 2, 3])
    assert s.coefficient(0) == 0
    with pytest.raises(ValueError):
        s.coefficient(4)
