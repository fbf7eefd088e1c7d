"""Independent reference computations used to freeze expected values.

These deliberately avoid the package: ordinary Taylor coefficients, long
division of power series, and brute-force sums.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb, factorial


def bernoulli_recurrence(max_n):
    b = [Fraction(1)]
    for n in range(1, max_n + 1):
        b.append(-sum(comb(n + 1, k) * b[k] for k in range(n)) / (n + 1))
    return b


def taylor_divide(num, den, order):
    """Ordinary power-series quotient num/den up to t**order."""
    q = []
    for n in range(order + 1):
        acc = Fraction(num[n]) if n < len(num) else Fraction(0)
        acc -= sum(q[k] * den[n - k] for k in range(n) if n - k < len(den))
        q.append(acc / den[0])
    return q


def genocchi_taylor(a, max_n):
    """Differential coefficients of a t / (1 + e^t + ... + e^{(a-1)t}) by Taylor division."""
    den = [sum(Fraction(j**n, factorial(n)) for j in range(a)) for n in range(max_n + 1)]
    num = [Fraction(0), Fraction(a)]
    q = taylor_divide(num, den, max_n)
    return [q[n] * factorial(n) for n in range(max_n + 1)]


def egf_mul_taylor(a, b):
    """Product of two EGF coefficient lists via ordinary Cauchy product."""
    n = len(a)
    ta = [Fraction(x) / factorial(i) for i, x in enumerate(a)]
    tb = [Fraction(x) / factorial(i) for i, x in enumerate(b)]
    return [sum(ta[k] * tb[m - k] for k in range(m + 1)) * factorial(m) for m in range(n)]


def difference_table_at_zero(f, d):
    """(Delta^k f)(0) for k = 0..d, straight from the alternating-sum definition."""
    return [sum((-1) ** (k - j) * comb(k, j) * f(j) for j in range(k + 1)) for k in range(d + 1)]
