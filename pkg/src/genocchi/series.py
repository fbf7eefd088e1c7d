"""Truncated formal power series stored by differential coefficients.

A series ``EGFSeries((a_0, ..., a_N))`` stands for ``sum a_n t**n / n!``
truncated after ``t**N``. Working with differential coefficients (rather
than ordinary Taylor coefficients) makes the product a binomial convolution
and integrality statements direct: a series is IDC exactly when every stored
coefficient is an integer.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Optional

from .numerics import RationalLike, format_rational

__all__ = [
    "EGFSeries",
    "IdcCertificate",
    "idc_check",
    "series_add",
    "series_exp",
    "series_geometric_sum",
    "series_mul",
    "series_one",
    "series_reciprocal",
    "series_scale_argument",
]


@dataclass(frozen=True)
class EGFSeries:
    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[RationalLike]):
        cs = tuple(Fraction(c) for c in coeffs)
        if not cs:
            raise ValueError("a series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __add__(self, other: EGFSeries) -> EGFSeries:
        return series_add(self, other)

    def __mul__(self, other: EGFSeries) -> EGFSeries:
        return series_mul(self, other)

    def __neg__(self) -> EGFSeries:
        return EGFSeries(-c for c in self.coeffs)

    def scale(self, c: RationalLike) -> EGFSeries:
        """Multiply every coefficient by the constant ``c``."""
        c = Fraction(c)
        return EGFSeries(c * x for x in self.coeffs)

    def __str__(self) -> str:
        terms = []
        for n, c in enumerate(self.coeffs):
            if c == 0:
                continue
            a = format_rational(c)
            terms.append(a if n == 0 else f"({a}) t^{n}/{n}!")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(t^{self.order + 1})"


@dataclass(frozen=True)
class IdcCertificate:
    is_idc: bool
    first_violation: Optional[tuple[int, Fraction]] = None


def _check_orders(f: EGFSeries, g: EGFSeries) -> None:
    if f.order != g.order:
        raise ValueError(f"series orders differ: {f.order} != {g.order}")


def series_one(order: int) -> EGFSeries:
    return EGFSeries([1] + [0] * order)


def series_exp(c: RationalLike, order: int) -> EGFSeries:
    """e^{ct}: the n-th differential coefficient is c**n."""
    c = Fraction(c)
    out = [Fraction(1)]
    for _ in range(order):
        out.append(out[-1] * c)
    return EGFSeries(out)


def series_geometric_sum(a: int, order: int) -> EGFSeries:
    """e^{(a-1)t} + ... + e^t + 1, i.e. a_0 = a and a_n = 1^n + ... + (a-1)^n."""
    if a < 2:
        raise ValueError(f"geometric sum needs a >= 2, got {a}")
    out = [Fraction(a)]
    for n in range(1, order + 1):
        out.append(Fraction(sum(j**n for j in range(1, a))))
    return EGFSeries(out)


def series_add(f: EGFSeries, g: EGFSeries) -> EGFSeries:
    _check_orders(f, g)
    return EGFSeries(x + y for x, y in zip(f.coeffs, g.coeffs))


def series_mul(f: EGFSeries, g: EGFSeries) -> EGFSeries:
    """Binomial convolution c_n = sum_k C(n, k) a_k b_{n-k}."""
    _check_orders(f, g)
    a, b = f.coeffs, g.coeffs
    out = []
    for n in range(f.order + 1):
        out.append(sum(comb(n, k) * a[k] * b[n - k] for k in range(n + 1)))
    return EGFSeries(out)


def series_reciprocal(f: EGFSeries) -> EGFSeries:
    """Invert ``f`` by the triangular recurrence

        b_0 = 1/a_0,  b_n = -(1/a_0) * sum_{k=1}^{n} C(n, k) a_k b_{n-k}.
    """
    a = f.coeffs
    if a[0] == 0:
        raise ZeroDivisionError("series with zero constant term has no reciprocal")
    inv_a0 = 1 / a[0]
    b = [inv_a0]
    for n in range(1, f.order + 1):
        acc = sum(comb(n, k) * a[k] * b[n - k] for k in range(1, n + 1))
        b.append(-inv_a0 * acc)
    return EGFSeries(b)


def series_scale_argument(f: EGFSeries, c: RationalLike) -> EGFSeries:
    """f(ct): a_n becomes c**n * a_n."""
    c = Fraction(c)
    out = []
    power = Fraction(1)
    for x in f.coeffs:
        out.append(power * x)
        power *= c
    return EGFSeries(out)


def idc_check(f: EGFSeries) -> IdcCertificate:
    for n, c in enumerate(f.coeffs):
        if c.denominator != 1:
            return IdcCertificate(False, (n, c))
    return IdcCertificate(True)
