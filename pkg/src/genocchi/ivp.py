"""Integer-valued polynomials built from Bernoulli numbers.

A rational polynomial P is integer-valued iff its Newton coefficients
(Delta^k P)(0) are all integers, since the binomial polynomials C(X, k)
form a Z-basis of Int(Z). An independent check samples P at deg P + 1
consecutive integers: a polynomial integral there is integral everywhere.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Literal, Optional

from .bernoulli import bernoulli_numbers, bernoulli_polynomial
from .numerics import RationalLike, VerificationError
from .polynomial import X, RationalPolynomial, binomial_basis

CertMethod = Literal["newton_basis", "consecutive_sampling"]

__all__ = [
    "IvpCertificate",
    "NewtonExpansion",
    "Probe",
    "TriangleRow",
    "bernoulli_reciprocal_ivp_check",
    "certify_integer_valued",
    "forward_difference",
    "newton_expand",
    "newton_to_polynomial",
    "scaled_reciprocal_probe",
    "poly_reciprocal",
    "script_g",
    "script_g_degree",
    "script_g_from_bernoulli_polynomial",
    "sigma_brute_force",
    "sigma_poly",
    "sigma_star_check",
    "sigma_star_identity_holds",
    "triangle",
]


@dataclass(frozen=True)
class NewtonExpansion:
    """Coefficients of P in the binomial basis: P = sum coeffs[k] * C(X, k)."""

    coeffs: tuple[Fraction, ...]

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def to_polynomial(self) -> RationalPolynomial:
        return newton_to_polynomial(self.coeffs)


@dataclass(frozen=True)
class IvpCertificate:
    is_integer_valued: bool
    witness: Optional[int]
    method: CertMethod


@dataclass(frozen=True)
class TriangleRow:
    n: int
    entries: tuple[int, ...]

    def padded(self) -> tuple[int, ...]:
        """Entries for k = 0..n-1, restoring the zero a_{n,n-1} on even rows."""
        return self.entries + (0,) * (self.n - len(self.entries))


@dataclass(frozen=True)
class Probe:
    p_ivp: bool
    scaled_reciprocal_ivp: bool
    witness: Optional[int] = None


def poly_reciprocal(p: RationalPolynomial) -> RationalPolynomial:
    """Reverse the coefficients over 0..deg P, i.e. X^deg(P) * P(1/X)."""
    return RationalPolynomial(reversed(p.coeffs))


def forward_difference(p: RationalPolynomial, k: int = 1) -> RationalPolynomial:
    for _ in range(k):
        if p.is_zero():
            break
        p = p.shift(1) - p
    return p


def newton_expand(p: RationalPolynomial) -> NewtonExpansion:
    """(Delta^k P)(0) for k = 0..deg P, from the difference table of P(0..deg P)."""
    row = [p(x) for x in range(p.degree + 1)]
    out = []
    while row:
        out.append(row[0])
        row = [row[i + 1] - row[i] for i in range(len(row) - 1)]
    return NewtonExpansion(tuple(out))


def newton_to_polynomial(coeffs: Iterable[RationalLike]) -> RationalPolynomial:
    p = RationalPolynomial()
    for k, c in enumerate(coeffs):
        if c:
            p = p + binomial_basis(k) * c
    return p


def certify_integer_valued(
    p: RationalPolynomial, method: CertMethod = "newton_basis"
) -> IvpCertificate:
    if method == "newton_basis":
        # the first non-integral Newton coefficient c_k makes P(k) = c_k + integer
        for k, c in enumerate(newton_expand(p).coeffs):
            if c.denominator != 1:
                return IvpCertificate(False, k, method)
        return IvpCertificate(True, None, method)
    if method == "consecutive_sampling":
        for x in range(max(p.degree, 0) + 1):
            if p(x).denominator != 1:
                return IvpCertificate(False, x, method)
        return IvpCertificate(True, None, method)
    raise ValueError(f"unknown certification method {method!r}")


def script_g(n: int) -> RationalPolynomial:
    """The polynomial interpolating a -> G_{n,a}: sum_{k<n} C(n,k) B_k X^k."""
    if n < 0:
        raise ValueError("n must be >= 0")
    b = bernoulli_numbers(n)
    return RationalPolynomial(comb(n, k) * b[k] for k in range(n))


def script_g_from_bernoulli_polynomial(n: int) -> RationalPolynomial:
    """(B_n(X) - B_n)^*, the reciprocal taken over degree n."""
    q = bernoulli_polynomial(n) - bernoulli_numbers(n)[n]
    if n == 0:
        return q
    # q has degree n and vanishes at 0, so reversing over 0..n is just poly_reciprocal
    return poly_reciprocal(q)


def script_g_degree(n: int) -> int:
    if n < 1:
        raise ValueError("n must be >= 1")
    if n % 2 == 1 or n == 2:
        return n - 1
    return n - 2


def bernoulli_reciprocal_ivp_check(
    n: int, method: CertMethod = "newton_basis"
) -> IvpCertificate:
    """Certify that B_n*(X) is integer-valued, for odd n >= 3."""
    if n < 3 or n % 2 == 0:
        raise ValueError(f"n must be odd and >= 3, got {n}")
    return certify_integer_valued(poly_reciprocal(bernoulli_polynomial(n)), method)


def sigma_poly(n: int) -> RationalPolynomial:
    """Faulhaber interpolant of a -> 0^n + 1^n + ... + a^n (with 0^0 = 1)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    b = bernoulli_numbers(n)
    p = RationalPolynomial.monomial(n)
    inner = RationalPolynomial()
    for k in range(n + 1):
        inner = inner + RationalPolynomial.monomial(n + 1 - k, comb(n + 1, k) * b[k])
    return p + inner * Fraction(1, n + 1)


def sigma_brute_force(n: int, a: int) -> int:
    return sum(j**n for j in range(a + 1))


def _scaled_sigma_star(n: int) -> RationalPolynomial:
    return poly_reciprocal(sigma_poly(n)) * (n + 1)


def sigma_star_identity_holds(n: int) -> bool:
    """(n+1) sigma_n^*(X) == G_{n+1}(X) + (n+1) X, coefficientwise."""
    return _scaled_sigma_star(n) == script_g(n + 1) + X * (n + 1)


def sigma_star_check(n: int, method: CertMethod = "newton_basis") -> IvpCertificate:
    """Certify (n+1) sigma_n^* integer-valued; raise if the closed-form identity fails."""
    if not sigma_star_identity_holds(n):
        raise VerificationError(f"(n+1) sigma_n^* identity fails for n={n}")
    return certify_integer_valued(_scaled_sigma_star(n), method)


def triangle(max_n: int) -> list[TriangleRow]:
    """Rows n = 1..max_n of the Newton coefficients of G_n(X)."""
    rows = []
    for n in range(1, max_n + 1):
        exp = newton_expand(script_g(n))
        if not exp.is_integral():
            raise VerificationError(f"row {n} has a non-integral Newton coefficient")
        rows.append(TriangleRow(n, tuple(c.numerator for c in exp.coeffs)))
    return rows


def scaled_reciprocal_probe(p: RationalPolynomial) -> Probe:
    """Is P integer-valued, and is (deg P) * P^* integer-valued?"""
    if p.is_zero():
        raise ValueError("probe is undefined for the zero polynomial")
    scaled = poly_reciprocal(p) * p.degree
    cert = certify_integer_valued(scaled, "consecutive_sampling")
    return Probe(
        p_ivp=certify_integer_valued(p).is_integer_valued,
        scaled_reciprocal_ivp=cert.is_integer_valued,
        witness=cert.witness,
    )
