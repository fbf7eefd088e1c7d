"""Generalized Genocchi numbers G_{n,a}.

For an integer a >= 2, G_{n,a} is the n-th differential coefficient of

    a t / (e^{(a-1)t} + ... + e^t + 1).

Two independent routes are provided: inverting the geometric-sum series
(G_{n,a} = a n b_{n-1} where 1/f = sum b_n t^n/n!), and the triangular
recurrence obtained by multiplying by (e^{at} - 1)/(a t). Both keep exact
rationals throughout so the integrality and denominator certificates test
something real.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Literal, Union

from .numerics import (
    denominator_of,
    format_rational,
    is_prime,
    padic_valuation,
    prime_divisors,
    primes_up_to,
)
from .series import series_geometric_sum, series_reciprocal

Method = Literal["series", "recurrence"]

__all__ = [
    "GenocchiTable",
    "certify",
    "denominator_certificate",
    "genocchi_by_recurrence",
    "genocchi_by_series",
    "genocchi_table",
    "power_ratio_check",
    "reciprocal_denominator_audit",
    "sweep_primes",
    "valuation_certificate",
]


@dataclass(frozen=True)
class GenocchiTable:
    a: int
    max_n: int
    values: tuple[Fraction, ...]
    method: Method

    def __getitem__(self, n: int) -> Fraction:
        return self.values[n]

    def all_integral(self) -> bool:
        return all(v.denominator == 1 for v in self.values)

    def as_integers(self) -> list[int]:
        if not self.all_integral():
            bad = next(n for n, v in enumerate(self.values) if v.denominator != 1)
            raise ValueError(f"G_{{{bad},{self.a}}} = {self.values[bad]} is not an integer")
        return [v.numerator for v in self.values]


def _check_a(a: int) -> None:
    if a < 2:
        raise ValueError(f"a must be an integer >= 2, got {a}")


def genocchi_by_series(a: int, max_n: int) -> GenocchiTable:
    _check_a(a)
    b = series_reciprocal(series_geometric_sum(a, max(max_n - 1, 0)))
    values = [Fraction(0)] + [a * n * b[n - 1] for n in range(1, max_n + 1)]
    return GenocchiTable(a, max_n, tuple(values), "series")


def genocchi_by_recurrence(a: int, max_n: int) -> GenocchiTable:
    """Solve G_n + sum_{k=1}^{n-1} C(n,k) a^k/(k+1) G_{n-k} = 1 for ascending n."""
    _check_a(a)
    weights = [Fraction(a**k, k + 1) for k in range(max_n + 1)]
    g = [Fraction(0)]
    for n in range(1, max_n + 1):
        acc = sum(comb(n, k) * weights[k] * g[n - k] for k in range(1, n))
        g.append(1 - acc)
    return GenocchiTable(a, max_n, tuple(g), "recurrence")


def genocchi_table(a: int, max_n: int, method: Method = "series") -> GenocchiTable:
    if method == "series":
        return genocchi_by_series(a, max_n)
    if method == "recurrence":
        return genocchi_by_recurrence(a, max_n)
    raise ValueError(f"unknown method {method!r}")


def denominator_certificate(
    a: int, max_n: int, table: Union[GenocchiTable, None] = None
) -> list[bool]:
    """Entry n is whether den(G_{n,a}) divides a^(n-1).

    Works on the raw rationals. Entry 0 (G_{0,a} = 0) is trivially True.
    """
    _check_a(a)
    if table is None:
        table = genocchi_by_series(a, max_n)
    out = [table[0] == 0]
    for n in range(1, max_n + 1):
        out.append(a ** (n - 1) % denominator_of(table[n]) == 0)
    return out


def reciprocal_denominator_audit(a: int, max_n: int) -> list[bool]:
    """Entry n is whether den(b_n) divides a^(n+1), where 1/(geometric sum) = sum b_n t^n/n!."""
    _check_a(a)
    b = series_reciprocal(series_geometric_sum(a, max_n))
    return [a ** (n + 1) % denominator_of(b[n]) == 0 for n in range(max_n + 1)]


def valuation_certificate(a: int, n: int, p: int) -> Union[int, float]:
    _check_a(a)
    if n < 1:
        raise ValueError("n must be positive")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return padic_valuation(p, genocchi_by_series(a, n)[n])


def power_ratio_check(a: int, p: int, max_k: int) -> bool:
    """True iff a^k/(k+1) is a p-integer for every 0 <= k <= max_k."""
    _check_a(a)
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if a % p:
        raise ValueError(f"{p} does not divide {a}")
    return all(padic_valuation(p, Fraction(a**k, k + 1)) >= 0 for k in range(max_k + 1))


def sweep_primes(a: int, max_n: int) -> list[int]:
    """Primes p <= max(a, max_n) together with the prime divisors of a."""
    return sorted(set(primes_up_to(max(a, max_n))) | set(prime_divisors(a)))


def certify(a: int, max_n: int) -> list[dict]:
    """Per-n report: value, denominator bound den | a^(n-1), and p-adic valuations."""
    table = genocchi_by_series(a, max_n)
    den_ok = denominator_certificate(a, max_n, table)
    primes = sweep_primes(a, max_n)
    report = []
    for n in range(1, max_n + 1):
        vals = {}
        for p in primes:
            v = padic_valuation(p, table[n])
            vals[str(p)] = "inf" if v == float("inf") else v
        report.append(
            {
                "a": a,
                "n": n,
                "value": format_rational(table[n]),
                "den_bound_ok": den_ok[n],
                "valuations": vals,
            }
        )
    return report
