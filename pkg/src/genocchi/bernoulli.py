"""Bernoulli numbers and polynomials, classical Genocchi numbers.

Convention: B_1 = -1/2, from t e^{Xt} / (e^t - 1) at X = 0.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .numerics import VerificationError, primes_up_to
from .polynomial import RationalPolynomial
from .series import EGFSeries, series_reciprocal

__all__ = [
    "BernoulliCache",
    "bernoulli",
    "bernoulli_by_recurrence",
    "bernoulli_by_series",
    "bernoulli_numbers",
    "bernoulli_polynomial",
    "classical_genocchi",
    "von_staudt_clausen_check",
]


@dataclass(frozen=True)
class BernoulliCache:
    values: tuple[Fraction, ...]

    def __getitem__(self, n: int) -> Fraction:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)

    @property
    def max_n(self) -> int:
        return len(self.values) - 1


def bernoulli_by_series(max_n: int) -> list[Fraction]:
    """Invert (e^t - 1)/t, whose n-th differential coefficient is 1/(n+1)."""
    f = EGFSeries(Fraction(1, n + 1) for n in range(max_n + 1))
    return list(series_reciprocal(f).coeffs)


def bernoulli_by_recurrence(max_n: int) -> list[Fraction]:
    """Solve sum_{k=0}^{n} C(n+1, k) B_k = 0 for B_n, n >= 1."""
    b = [Fraction(1)]
    for n in range(1, max_n + 1):
        b.append(-sum(comb(n + 1, k) * b[k] for k in range(n)) / (n + 1))
    return b


_cache: list[Fraction] = [Fraction(1)]
_lock = threading.Lock()


def bernoulli_numbers(max_n: int) -> BernoulliCache:
    """B_0..B_max_n, via series inversion cross-checked against the recurrence.

    Results are memoised in a grow-only module cache.
    """
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    with _lock:
        if len(_cache) <= max_n:
            by_series = bernoulli_by_series(max_n)
            by_recurrence = bernoulli_by_recurrence(max_n)
            for n in range(len(_cache), max_n + 1):
                if by_series[n] != by_recurrence[n]:
                    raise VerificationError(
                        f"B_{n}: series gives {by_series[n]}, recurrence gives {by_recurrence[n]}"
                    )
                _cache.append(by_series[n])
        return BernoulliCache(tuple(_cache[: max_n + 1]))


def bernoulli(n: int) -> Fraction:
    return bernoulli_numbers(n)[n]


def bernoulli_polynomial(n: int) -> RationalPolynomial:
    """B_n(X) = sum_k C(n, k) B_k X^{n-k}."""
    b = bernoulli_numbers(n)
    return RationalPolynomial(comb(n, n - i) * b[n - i] for i in range(n + 1))


def classical_genocchi(max_n: int) -> list[int]:
    """G_n = -2 (2^n - 1) B_n for n = 0..max_n."""
    b = bernoulli_numbers(max_n)
    out = []
    for n in range(max_n + 1):
        g = -2 * (2**n - 1) * b[n]
        if g.denominator != 1:
            raise VerificationError(f"G_{n} = {g} is not an integer")
        out.append(g.numerator)
    return out


def von_staudt_clausen_check(n: int) -> bool:
    """True iff B_n + sum of 1/p over primes p with (p - 1) | n is an integer."""
    if n < 2 or n % 2:
        raise ValueError(f"von Staudt-Clausen needs an even n >= 2, got {n}")
    total = bernoulli(n)
    for p in primes_up_to(n + 1):
        if n % (p - 1) == 0:
            total += Fraction(1, p)
    return total.denominator == 1
