"""Dense univariate polynomials over the rationals."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from math import comb
from typing import Iterable, Union

from .numerics import RationalLike, format_rational, parse_rational

__all__ = ["RationalPolynomial", "X", "binomial_basis", "parse_polynomial"]


def _trim(cs: list[Fraction]) -> tuple[Fraction, ...]:
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True)
class RationalPolynomial:
    """Coefficients are stored lowest degree first; ``coeffs[i]`` multiplies X**i.

    Trailing zeros are stripped, so the zero polynomial has ``coeffs == ()``
    and ``degree == -1``.
    """

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        object.__setattr__(self, "coeffs", _trim([Fraction(c) for c in coeffs]))

    @classmethod
    def constant(cls, c: RationalLike) -> RationalPolynomial:
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c: RationalLike = 1) -> RationalPolynomial:
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __call__(self, x: RationalLike) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: Union[RationalPolynomial, RationalLike]) -> RationalPolynomial:
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return RationalPolynomial(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> RationalPolynomial:
        return RationalPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: Union[RationalPolynomial, RationalLike]) -> RationalPolynomial:
        return self + (-_coerce(other))

    def __rsub__(self, other: RationalLike) -> RationalPolynomial:
        return _coerce(other) - self

    def __mul__(self, other: Union[RationalPolynomial, RationalLike]) -> RationalPolynomial:
        if not isinstance(other, RationalPolynomial):
            c = Fraction(other)
            return RationalPolynomial(c * x for x in self.coeffs)
        if self.is_zero() or other.is_zero():
            return RationalPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def shift(self, h: RationalLike) -> RationalPolynomial:
        """Return P(X + h)."""
        h = Fraction(h)
        out = [Fraction(0)] * len(self.coeffs)
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            hp = Fraction(1)
            # (X + h)^i = sum_j C(i, j) h^(i-j) X^j, walked from j = i downward
            for j in range(i, -1, -1):
                out[j] += c * comb(i, j) * hp
                hp *= h
        return RationalPolynomial(out)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = format_rational(mag)
            else:
                mono = "X" if i == 1 else f"X^{i}"
                body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def to_csv(self) -> str:
        """Comma-separated coefficients, lowest degree first (the input format)."""
        return ",".join(format_rational(c) for c in self.coeffs) or "0"


def _coerce(x: Union[RationalPolynomial, RationalLike]) -> RationalPolynomial:
    return x if isinstance(x, RationalPolynomial) else RationalPolynomial.constant(x)


X = RationalPolynomial.monomial(1)


@lru_cache(maxsize=None)
def binomial_basis(k: int) -> RationalPolynomial:
    """C(X, k) = X (X - 1) ... (X - k + 1) / k!."""
    p = RationalPolynomial.constant(1)
    for j in range(k):
        p = p * RationalPolynomial([Fraction(-j, j + 1), Fraction(1, j + 1)])
    return p


def parse_polynomial(text: str) -> RationalPolynomial:
    """Parse ``"c0,c1,...,cd"`` (rational literals, lowest degree first)."""
    items = [s for s in text.split(",")]
    if any(not s.strip() for s in items):
        raise ValueError(f"empty coefficient in {text!r}")
    return RationalPolynomial(parse_rational(s) for s in items)
