import pytest
from hypothesis import given, strategies as st

from sigma_lab.series import InexactDivision, Polynomial, PowerSeries, catalan_gf
from sigma_lab.enumeration import catalan_number

coeffs = st.lists(st.integers(-20, 20), min_size=1, max_size=8)


def test_catalan_gf():
    c = catalan_gf(30)
    assert c.coeffs == [catalan_number(n) for n in range(31)]
    x = PowerSeries.x(30)
    assert c == 1 + x * c * c


def test_sqrt_exact():
    x = PowerSeries.x(20)
    s = (1 - 4 * x).sqrt()
    assert s * s == 1 - 4 * x
    assert s[0] == 1 and s[1] == -2


def test_sqrt_not_integral():
    x = PowerSeries.x(6)
    with pytest.raises(InexactDivision):
        (1 + x).sqrt()


def test_exact_int_division():
    x = PowerSeries.x(5)
    assert (2 + 4 * x) / 2 == 1 + 2 * x
    with pytest.raises(InexactDivision):
        (1 + 2 * x) / 2


def test_reciprocal_needs_unit():
    x = PowerSeries.x(5)
    with pytest.raises((InexactDivision, ZeroDivisionError, ValueError)):
        (2 + x).reciprocal()
    assert (1 - x).reciprocal().coeffs == [1] * 6


@given(coeffs, coeffs)
def test_division_inverts_multiplication(a, b):
    b = [1] + b[1:]
    order = 10
    pa, pb = PowerSeries(a, order), PowerSeries(b, order)
    assert (pa * pb) / pb == pa


@given(coeffs, coeffs)
def test_polynomial_ring(a, b):
    p, q = Polynomial(a), Polynomial(b)
    assert p * q == q * p
    assert (p + q) - q == p
    for v in (-2, 0, 3):
        assert (p * q)(v) == p(v) * q(v)


def test_div_x_and_shift():
    x = PowerSeries.x(8)
    s = x * x * (1 + x)
    assert s.div_x(2).coeffs[:2] == [1, 1]
    assert (1 + x).shift(2) == x * x * (1 + x)
