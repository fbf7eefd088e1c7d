"""Exact generalized Genocchi numbers, Bernoulli polynomials and integer-valued polynomials."""
from __future__ import annotations

__version__ = "0.1.0"

from .bernoulli import (
    bernoulli_numbers,
    bernoulli_polynomial,
    classical_genocchi,
    von_staudt_clausen_check,
)
from .genocchi import (
    GenocchiTable,
    denominator_certificate,
    genocchi_by_recurrence,
    genocchi_by_series,
    power_ratio_check,
    valuation_certificate,
)
from .ivp import (
    certify_integer_valued,
    forward_difference,
    newton_expand,
    poly_reciprocal,
    script_g,
    sigma_poly,
    triangle,
)
from .numerics import INFINITE, binomial, denominator_of, padic_valuation
from .polynomial import RationalPolynomial, binomial_basis
from .series import EGFSeries, series_reciprocal
