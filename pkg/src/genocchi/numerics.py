"""Exact scalar arithmetic: rationals, denominators, p-adic valuations, binomials.

``fractions.Fraction`` already keeps values in lowest terms with a positive
denominator, so it is used directly as the rational type.
"""
from __future__ import annotations

import math
import operator
import re
from fractions import Fraction
from typing import Union

Rational = Fraction
RationalLike = Union[int, Fraction]

#: valuation of zero
INFINITE = math.inf

_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


class VerificationError(ArithmeticError):
    """A computed value violated an identity that is known to hold."""


def rat_arith(x: RationalLike, y: RationalLike, op: str) -> Fraction:
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}; expected one of {sorted(_OPS)}") from None
    if op == "div" and y == 0:
        raise ZeroDivisionError("rational division by zero")
    return Fraction(fn(Fraction(x), Fraction(y)))


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``. Decimals and floats are rejected."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(x: RationalLike) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def is_integral(x: RationalLike) -> bool:
    return Fraction(x).denominator == 1


def denominator_of(x: RationalLike) -> int:
    """Smallest positive d with d*x an integer."""
    return Fraction(x).denominator


def is_prime(p: int) -> bool:
    """Deterministic trial division; fine for the p <= 10**6 used here."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0 or p % 3 == 0:
        return False
    i = 5
    while i * i <= p:
        if p % i == 0 or p % (i + 2) == 0:
            return False
        i += 6
    return True


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


def prime_divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _int_valuation(p: int, n: int) -> int:
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def padic_valuation(p: int, x: RationalLike) -> int | float:
    """Return the p-adic valuation of ``x``; :data:`INFINITE` for zero.

    >>> padic_valuation(3, Fraction(1, 6))
    -1
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    x = Fraction(x)
    if x == 0:
        return INFINITE
    return _int_valuation(p, x.numerator) - _int_valuation(p, x.denominator)


def binomial(n: int, k: int) -> int:
    """C(n, k) for naturals n, k; zero when k > n."""
    if n < 0 or k < 0:
        raise ValueError("binomial arguments must be natural numbers")
    return math.comb(n, k)


def binomial_row(n: int) -> list[int]:
    return [math.comb(n, k) for k in range(n + 1)]

