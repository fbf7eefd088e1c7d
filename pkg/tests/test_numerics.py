from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from genocchi.numerics import (
    INFINITE,
    binomial,
    denominator_of,
    format_rational,
    is_prime,
    padic_valuation,
    parse_rational,
    primes_up_to,
    rat_arith,
)
from oracles import bernoulli_recurrence

rationals = st.fractions(max_denominator=10**6).filter(lambda x: abs(x.numerator) < 10**12)
primes = st.sampled_from([2, 3, 5, 7, 11, 13, 97])


def test_rat_arith_examples():
    assert rat_arith(Fraction(1, 6), Fraction(-1, 2), "add") == Fraction(-1, 3)
    assert rat_arith(Fraction(1, 3), 3, "mul") == 1
    assert rat_arith(Fraction(1, 2), Fraction(1, 3), "sub") == Fraction(1, 6)
    assert rat_arith(1, Fraction(2, 3), "div") == Fraction(3, 2)


def test_lowest_terms_and_sign():
    x = Fraction(2, 4)
    assert (x.numerator, x.denominator) == (1, 2)
    y = Fraction(3, -6)
    assert (y.numerator, y.denominator) == (-1, 2)
    assert Fraction(0, -7).denominator == 1


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        rat_arith(1, 0, "div")
    with pytest.raises(ValueError):
        rat_arith(1, 2, "pow")


def test_denominator_of():
    assert denominator_of(Fraction(3, 4)) == 4
    assert denominator_of(5) == 1
    assert denominator_of(bernoulli_recurrence(6)[6]) == 42


def test_padic_valuation_examples():
    assert padic_valuation(2, 12) == 2
    assert padic_valuation(3, Fraction(1, 6)) == -1
    assert padic_valuation(5, 0) == INFINITE
    assert padic_valuation(7, 0) > 10**9


def test_padic_rejects_composite():
    with pytest.raises(ValueError):
        padic_valuation(4, 8)


def test_binomial_examples():
    assert binomial(5, 2) == 10
    assert all(binomial(n, 0) == 1 for n in range(20))
    assert binomial(4, 7) == 0


def test_pascal():
    for n in range(1, 65):
        for k in range(1, n + 1):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


def test_primes():
    assert primes_up_to(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert [p for p in range(200) if is_prime(p)] == primes_up_to(199)
    assert is_prime(999983) and not is_prime(999981)


@pytest.mark.parametrize("text,value", [("3", 3), ("-1/2", Fraction(-1, 2)), ("4/6", Fraction(2, 3)), (" 7 / 3 ", Fraction(7, 3))])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["1.5", "", "a/b", "1/", "1e3"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_format_rational():
    assert format_rational(Fraction(-691, 2730)) == "-691/2730"
    assert format_rational(Fraction(4, 2)) == "2"


@given(rationals)
def test_format_parse_round_trip(x):
    assert parse_rational(format_rational(x)) == x


@given(rationals, rationals, primes)
def test_valuation_multiplicative(x, y, p):
    assert padic_valuation(p, x * y) == padic_valuation(p, x) + padic_valuation(p, y)


@given(rationals, rationals, primes)
def test_valuation_ultrametric(x, y, p):
    assert padic_valuation(p, x + y) >= min(padic_valuation(p, x), padic_valuation(p, y))


@pytest.mark.parametrize(
    "x,factors",
    [(Fraction(1, 360), {2: 3, 3: 2, 5: 1}), (Fraction(7, 2730), {2: 1, 3: 1, 5: 1, 13: 1}), (Fraction(9, 4), {2: 2})],
)
def test_denominator_from_valuations(x, factors):
    den = 1
    for p in primes_up_to(20):
        den *= p ** max(0, -padic_valuation(p, x))
    assert den == denominator_of(x)
    assert den == eval("*".join(f"{p}**{e}" for p, e in factors.items()))
