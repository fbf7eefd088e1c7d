from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from genocchi.polynomial import RationalPolynomial, X, binomial_basis, parse_polynomial

coeff = st.fractions(min_value=-50, max_value=50, max_denominator=12)
polys = st.lists(coeff, max_size=10).map(RationalPolynomial)


def test_normalisation():
    p = RationalPolynomial([1, 2, 0, 0])
    assert p.coeffs == (1, 2) and p.degree == 1
    assert RationalPolynomial([0, 0]).is_zero()
    assert RationalPolynomial().degree == -1


def test_arithmetic():
    p = RationalPolynomial([1, 1])
    assert p * p == RationalPolynomial([1, 2, 1])
    assert p - p == RationalPolynomial()
    assert 2 * X + 1 == p + X
    assert 1 - X == RationalPolynomial([1, -1])


def test_eval():
    p = RationalPolynomial([3, 7, 5, 2])
    assert p(2) == 3 + 14 + 20 + 16
    assert p(Fraction(1, 2)) == 3 + Fraction(7, 2) + Fraction(5, 4) + Fraction(1, 4)


@given(polys, st.integers(-5, 5), st.integers(-5, 5))
def test_shift(p, h, x):
    assert p.shift(h)(x) == p(x + h)


def test_binomial_basis():
    for k in range(9):
        b = binomial_basis(k)
        assert b.degree == k
        assert all(b(n) == comb(n, k) for n in range(15))
    assert binomial_basis(3) == RationalPolynomial([0, Fraction(1, 3), Fraction(-1, 2), Fraction(1, 6)])


def test_str():
    assert str(RationalPolynomial([Fraction(1, 6), -1, 1])) == "X^2 - X + 1/6"
    assert str(RationalPolynomial([0, -2])) == "-2*X"
    assert str(RationalPolynomial()) == "0"


def test_parse():
    assert parse_polynomial("0,1/2,1/2") == RationalPolynomial([0, Fraction(1, 2), Fraction(1, 2)])
    assert parse_polynomial("0,1/2,1/2").to_csv() == "0,1/2,1/2"
    with pytest.raises(ValueError):
        parse_polynomial("1,,2")
    with pytest.raises(ZeroDivisionError):
        parse_polynomial("1/0")
