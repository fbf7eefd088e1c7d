from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from genocchi.numerics import denominator_of
from genocchi.series import (
    EGFSeries,
    idc_check,
    series_add,
    series_exp,
    series_geometric_sum,
    series_mul,
    series_one,
    series_reciprocal,
    series_scale_argument,
)
from oracles import egf_mul_taylor

small_ints = st.integers(-9, 9)


@st.composite
def int_series(draw, order=None, a0=None):
    n = draw(st.integers(0, 20)) if order is None else order
    cs = draw(st.lists(small_ints, min_size=n + 1, max_size=n + 1))
    if a0 is not None:
        cs[0] = draw(a0)
    return EGFSeries(cs)


def test_exp():
    assert series_exp(1, 3).coeffs == (1, 1, 1, 1)
    assert series_exp(0, 3).coeffs == (1, 0, 0, 0)
    assert series_exp(2, 3).coeffs == (1, 2, 4, 8)


def test_geometric_sum():
    assert series_geometric_sum(2, 2).coeffs == (2, 1, 1)
    assert series_geometric_sum(3, 2).coeffs == (3, 3, 5)
    for a in range(2, 9):
        assert series_geometric_sum(a, 4)[0] == a
    with pytest.raises(ValueError):
        series_geometric_sum(1, 3)


def test_geometric_sum_is_sum_of_exponentials():
    for a in range(2, 6):
        total = series_exp(0, 6)
        for j in range(1, a):
            total = total + series_exp(j, 6)
        assert total == series_geometric_sum(a, 6)


def test_add():
    assert series_add(EGFSeries([1, 1]), EGFSeries([1, -1])).coeffs == (2, 0)
    f = EGFSeries([3, Fraction(1, 2), 7])
    assert f + EGFSeries([0, 0, 0]) == f
    assert (series_exp(1, 2) + series_exp(-1, 2)).coeffs == (2, 0, 2)


def test_order_mismatch():
    with pytest.raises(ValueError):
        series_add(series_exp(1, 2), series_exp(1, 3))
    with pytest.raises(ValueError):
        series_mul(series_exp(1, 2), series_exp(1, 3))


def test_mul():
    assert (series_exp(1, 4) * series_exp(1, 4)).coeffs == (1, 2, 4, 8, 16)
    f = EGFSeries([5, -2, Fraction(1, 3), 0])
    assert f * series_one(3) == f
    t = EGFSeries([0, 1, 0, 0])
    got = series_mul(t, series_geometric_sum(2, 3))
    assert list(got.coeffs) == egf_mul_taylor([0, 1, 0, 0], [2, 1, 1, 1]) == [0, 2, 2, 3]


@given(int_series(order=8), int_series(order=8))
def test_mul_matches_taylor_oracle(f, g):
    assert list(series_mul(f, g).coeffs) == egf_mul_taylor(f.coeffs, g.coeffs)


def test_reciprocal():
    assert series_reciprocal(series_exp(1, 6)) == series_exp(-1, 6)
    assert series_reciprocal(series_one(4)) == series_one(4)
    b = series_reciprocal(series_geometric_sum(2, 5))
    for n in range(6):
        assert 2 ** (n + 1) % denominator_of(b[n]) == 0
    with pytest.raises(ZeroDivisionError):
        series_reciprocal(EGFSeries([0, 1, 2]))


def test_scale_argument():
    assert series_scale_argument(series_exp(1, 5), 2) == series_exp(2, 5)
    f = EGFSeries([4, 3, 2, 1])
    assert series_scale_argument(f, 0).coeffs == (4, 0, 0, 0)
    g = series_geometric_sum(3, 4)
    normalised = series_scale_argument(g, 3).scale(Fraction(1, 3))
    assert idc_check(normalised).is_idc and normalised[0] == 1
    assert idc_check(series_reciprocal(normalised)).is_idc


def test_idc_check():
    assert idc_check(series_exp(1, 5)).is_idc
    cert = idc_check(EGFSeries([1, Fraction(1, 2)]))
    assert not cert.is_idc and cert.first_violation == (1, Fraction(1, 2))
    g = series_geometric_sum(2, 10)
    assert idc_check(series_reciprocal(series_scale_argument(g, 2).scale(Fraction(1, 2)))).is_idc
    assert not idc_check(series_reciprocal(g)).is_idc


def test_str():
    assert str(series_exp(1, 2)) == "1 + (1) t^1/1! + (1) t^2/2! + O(t^3)"


@settings(max_examples=60)
@given(st.data())
def test_product_closure(data):
    n = data.draw(st.integers(0, 20))
    f, g = data.draw(int_series(order=n)), data.draw(int_series(order=n))
    assert idc_check(f * g).is_idc


@settings(max_examples=60)
@given(int_series(a0=st.sampled_from([1, -1])))
def test_unit_reciprocal_is_idc(f):
    inv = series_reciprocal(f)
    assert idc_check(inv).is_idc
    assert f * inv == series_one(f.order)


@settings(max_examples=60)
@given(int_series(a0=st.integers(2, 30) | st.integers(-30, -2)))
def test_non_unit_reciprocal(f):
    inv = series_reciprocal(f)
    assert inv[0].denominator != 1
    a0 = abs(f[0].numerator)
    assert all(a0 ** (n + 1) % denominator_of(inv[n]) == 0 for n in range(f.order + 1))
    assert f * inv == series_one(f.order)


@given(int_series(order=6), st.fractions(max_denominator=9), st.fractions(max_denominator=9))
def test_scaling_multiplicative(f, c, d):
    assert series_scale_argument(series_scale_argument(f, c), d) == series_scale_argument(f, c * d)
