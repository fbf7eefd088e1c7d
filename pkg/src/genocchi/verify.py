"""Verification suites run by ``genocchi verify``.

Each suite returns a :class:`VerifyReport`; a suite passes iff its failure
list is empty. Randomised checks draw from ``random.Random(seed)`` so runs
are reproducible.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Any, Callable

from . import bernoulli as bern
from . import genocchi as gen
from . import ivp
from .numerics import (
    denominator_of,
    format_rational,
    padic_valuation,
    prime_divisors,
    primes_up_to,
)
from .polynomial import RationalPolynomial, binomial_basis
from .series import (
    EGFSeries,
    idc_check,
    series_geometric_sum,
    series_mul,
    series_one,
    series_reciprocal,
    series_scale_argument,
)

# Newton coefficients a_{n,k}, 0 <= k <= deg G_n, as published (even rows omit a zero a_{n,n-1}).
REFERENCE_TRIANGLE = {
    1: (1,),
    2: (1, -1),
    3: (1, -1, 1),
    4: (1, -1, 2),
    5: (1, -1, 1, -6, -4),
    6: (1, -1, -2, -18, -12),
    7: (1, -1, 1, 48, 232, 300, 120),
    8: (1, -1, 18, 276, 984, 1200, 480),
}

COR2_BASES = (2, 3, 6, 10)


@dataclass
class VerifyConfig:
    max_a: int = 12
    max_n: int = 40
    poly_max_n: int = 30
    instances: int = 200
    seed: int = 20240101


@dataclass
class VerifyReport:
    suite: str
    cases: int = 0
    failures: list[dict[str, Any]] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, label: str, ok: bool, **inputs: Any) -> bool:
        self.cases += 1
        if not ok:
            self.failures.append({"check": label, **{k: _show(v) for k, v in inputs.items()}})
        return ok


def _show(v: Any) -> Any:
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, (RationalPolynomial, EGFSeries)):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_show(x) for x in v]
    return v


def _random_rational(rng: random.Random, num: int = 20, den: int = 6) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def _random_int_series(rng: random.Random, order: int, a0: int | None = None) -> EGFSeries:
    cs = [rng.randint(-9, 9) for _ in range(order + 1)]
    if a0 is not None:
        cs[0] = a0
    return EGFSeries(cs)


def suite_numerics(cfg: VerifyConfig) -> VerifyReport:
    rep = VerifyReport("numerics")
    rng = random.Random(cfg.seed)
    primes = [2, 3, 5, 7, 11]
    for _ in range(cfg.instances):
        x, y = _random_rational(rng, 500, 300), _random_rational(rng, 500, 300)
        p = rng.choice(primes)
        vx, vy = padic_valuation(p, x), padic_valuation(p, y)
        rep.check("v_p(xy) = v_p(x) + v_p(y)", padic_valuation(p, x * y) == vx + vy, p=p, x=x, y=y)
        rep.check("v_p(x+y) >= min", padic_valuation(p, x + y) >= min(vx, vy), p=p, x=x, y=y)
        if x:
            den = 1
            for q in primes_up_to(300):
                den *= q ** max(0, -padic_valuation(q, x))
            rep.check("den = prod p^max(0,-v_p)", den == denominator_of(x), x=x)
    for n in range(1, 65):
        for k in range(1, n + 1):
            rep.check("Pascal", comb(n, k) == comb(n - 1, k - 1) + comb(n - 1, k), n=n, k=k)
    return rep


def suite_series(cfg: VerifyConfig) -> VerifyReport:
    """IDC closure, both directions of the reciprocal criterion, denominator bound."""
    rep = VerifyReport("series")
    rng = random.Random(cfg.seed + 1)
    for _ in range(cfg.instances):
        order = rng.randint(0, 32)
        f, g = _random_int_series(rng, order), _random_int_series(rng, order)
        rep.check("IDC product closure", idc_check(series_mul(f, g)).is_idc, f=f, g=g)

        unit = _random_int_series(rng, order, rng.choice((1, -1)))
        inv = series_reciprocal(unit)
        rep.check("unit constant term -> IDC reciprocal", idc_check(inv).is_idc, f=unit)
        rep.check("f * (1/f) = 1", series_mul(unit, inv) == series_one(order), f=unit)

        a0 = rng.choice((-1, 1)) * rng.randint(2, 12)
        h = _random_int_series(rng, order, a0)
        hinv = series_reciprocal(h)
        rep.check("|a_0| >= 2 -> b_0 non-integral", hinv[0].denominator != 1, f=h)
        rep.check(
            "den(b_n) | a_0^(n+1)",
            all(abs(a0) ** (n + 1) % denominator_of(hinv[n]) == 0 for n in range(order + 1)),
            f=h,
        )
        rep.check("f * (1/f) = 1", series_mul(h, hinv) == series_one(order), f=h)

        c, d = _random_rational(rng), _random_rational(rng)
        rep.check(
            "scale(scale(f,c),d) = scale(f,cd)",
            series_scale_argument(series_scale_argument(f, c), d) == series_scale_argument(f, c * d),
            f=f, c=c, d=d,
        )
    for a in range(2, cfg.max_a + 1):
        f = series_geometric_sum(a, cfg.max_n)
        normalised = series_scale_argument(f, a).scale(Fraction(1, a))
        rep.check("f(a t)/a is IDC with constant 1", idc_check(normalised).is_idc and normalised[0] == 1, a=a)
        scaled_inv = series_reciprocal(normalised)
        rep.check("a/f(a t) is IDC", idc_check(scaled_inv).is_idc, a=a)
    return rep


def suite_bernoulli(cfg: VerifyConfig) -> VerifyReport:
    rep = VerifyReport("bernoulli")
    top = max(64, cfg.max_n)
    by_series = bern.bernoulli_by_series(top)
    by_rec = bern.bernoulli_by_recurrence(top)
    for n in range(top + 1):
        rep.check("series B_n = recurrence B_n", by_series[n] == by_rec[n], n=n)
        if n >= 3 and n % 2:
            rep.check("B_n = 0 for odd n >= 3", by_rec[n] == 0, n=n)
    for n in range(2, 65, 2):
        rep.check("von Staudt-Clausen", bern.von_staudt_clausen_check(n), n=n)
    for n in range(cfg.poly_max_n + 1):
        p = bern.bernoulli_polynomial(n)
        rep.check("deg B_n(X) = n", p.degree == n, n=n)
        rep.check("B_n(0) = B_n", p(0) == by_rec[n], n=n)
        rep.check("B_n(1) - B_n(0)", p(1) - p(0) == (1 if n == 1 else 0), n=n)
    classical = bern.classical_genocchi(cfg.max_n)
    table = gen.genocchi_by_series(2, cfg.max_n)
    for n in range(cfg.max_n + 1):
        expected = -2 * (2**n - 1) * by_rec[n]
        rep.check("G_{n,2} = -2(2^n-1)B_n", table[n] == expected == classical[n], n=n, value=table[n])
    return rep


def suite_genocchi(cfg: VerifyConfig) -> VerifyReport:
    """Both computation routes, integrality, denominator and valuation certificates."""
    rep = VerifyReport("genocchi")
    for a in range(2, cfg.max_a + 1):
        by_series = gen.genocchi_by_series(a, cfg.max_n)
        by_rec = gen.genocchi_by_recurrence(a, cfg.max_n)
        den_ok = gen.denominator_certificate(a, cfg.max_n, by_series)
        den_ok_rec = gen.denominator_certificate(a, cfg.max_n, by_rec)
        primes = gen.sweep_primes(a, cfg.max_n)
        rep.check("G_{0,a} = 0, G_{1,a} = 1", by_series[0] == 0 and (cfg.max_n < 1 or by_series[1] == 1), a=a)
        for n in range(1, cfg.max_n + 1):
            g = by_series[n]
            rep.check("den(G_{n,a}) | a^(n-1)", den_ok[n] and den_ok_rec[n], a=a, n=n, value=g)
            rep.check("series = recurrence", g == by_rec[n], a=a, n=n, series=g, recurrence=by_rec[n])
            rep.check("G_{n,a} integral", g.denominator == 1, a=a, n=n, value=g)
            rep.check(
                "v_p(G_{n,a}) >= 0",
                all(padic_valuation(p, g) >= 0 for p in primes),
                a=a, n=n, value=g,
            )
        for p in prime_divisors(a):
            rep.check("a^k/(k+1) p-integral", gen.power_ratio_check(a, p, 64), a=a, p=p)
    for a in sorted(set(COR2_BASES) | set(range(2, cfg.max_a + 1))):
        audit = gen.reciprocal_denominator_audit(a, cfg.max_n)
        rep.check("den(b_n) | a^(n+1)", all(audit), a=a, failing=[n for n, ok in enumerate(audit) if not ok])
    for a in range(2, 7):
        table = gen.genocchi_by_series(a, 12)
        for n in range(13):
            rep.check("G_n(a) = G_{n,a}", ivp.script_g(n)(a) == table[n], a=a, n=n)
    return rep


def suite_polynomials(cfg: VerifyConfig) -> VerifyReport:
    rep = VerifyReport("polynomials")
    for n in range(cfg.poly_max_n + 1):
        g = ivp.script_g(n)
        rep.check("closed form = (B_n(X) - B_n)^*", g == ivp.script_g_from_bernoulli_polynomial(n), n=n)
        if n >= 1:
            rep.check("degree law", g.degree == ivp.script_g_degree(n), n=n, degree=g.degree)
            rep.check("G_n(0) = 1", g(0) == 1, n=n)
    rep.check("G_0 = 0", ivp.script_g(0).is_zero())
    for n in range(13):
        g = ivp.script_g(n)
        nb = ivp.certify_integer_valued(g, "newton_basis")
        cs = ivp.certify_integer_valued(g, "consecutive_sampling")
        rep.check("G_n integer-valued (both methods)", nb.is_integer_valued and cs.is_integer_valued, n=n)
        rep.check("G_n(x) integral on [-50, 50]", all(g(x).denominator == 1 for x in range(-50, 51)), n=n)
    for n in range(3, 22, 2):
        rep.check(
            "B_n^* integer-valued",
            ivp.bernoulli_reciprocal_ivp_check(n).is_integer_valued
            and ivp.bernoulli_reciprocal_ivp_check(n, "consecutive_sampling").is_integer_valued,
            n=n,
        )
    for n in range(21):
        rep.check("(n+1) sigma_n^* = G_{n+1} + (n+1)X", ivp.sigma_star_identity_holds(n), n=n)
        rep.check("(n+1) sigma_n^* integer-valued", ivp.sigma_star_check(n).is_integer_valued, n=n)
        probe = ivp.scaled_reciprocal_probe(ivp.sigma_poly(n))
        rep.check("sigma_n passes the probe", probe.p_ivp and probe.scaled_reciprocal_ivp, n=n)
    for n in range(11):
        s = ivp.sigma_poly(n)
        for a in range(21):
            rep.check("sigma_n(a) = brute force", s(a) == ivp.sigma_brute_force(n, a), n=n, a=a)
    rows = ivp.triangle(8)
    for row in rows:
        rep.check("reference triangle row", row.entries == REFERENCE_TRIANGLE[row.n], n=row.n, got=list(row.entries))
    probe = ivp.scaled_reciprocal_probe(binomial_basis(3))
    witness_ok = probe.witness is not None and (
        (ivp.poly_reciprocal(binomial_basis(3)) * 3)(probe.witness).denominator != 1
    )
    rep.check(
        "C(X,3) is a counterexample",
        probe.p_ivp and not probe.scaled_reciprocal_ivp and witness_ok,
        witness=probe.witness,
    )
    return rep


def _random_poly(rng: random.Random, max_deg: int) -> RationalPolynomial:
    deg = rng.randint(0, max_deg)
    return RationalPolynomial(_random_rational(rng, 30, 12) for _ in range(deg + 1))


def _random_mixed_ivp(rng: random.Random) -> RationalPolynomial:
    """Integer-valued about half the time: integer Newton coefficients, maybe one perturbed."""
    deg = rng.randint(0, 10)
    cs: list[Fraction] = [Fraction(rng.randint(-20, 20)) for _ in range(deg + 1)]
    if rng.random() < 0.5:
        k = rng.randint(0, deg)
        cs[k] += Fraction(rng.randint(1, 6), rng.randint(2, 7))
    return ivp.newton_to_polynomial(cs)


def suite_properties(cfg: VerifyConfig) -> VerifyReport:
    """Randomised Newton-basis properties: round-trip, method agreement, consecutive sampling."""
    rep = VerifyReport("properties")
    rng = random.Random(cfg.seed + 2)
    for _ in range(cfg.instances):
        p = _random_poly(rng, 16)
        exp = ivp.newton_expand(p)
        rep.check("Newton round-trip", exp.to_polynomial() == p, p=p)
        rep.check("Newton length = deg + 1", len(exp.coeffs) == p.degree + 1, p=p)

        q = _random_mixed_ivp(rng)
        nb = ivp.certify_integer_valued(q, "newton_basis")
        cs = ivp.certify_integer_valued(q, "consecutive_sampling")
        agree = nb.is_integer_valued == cs.is_integer_valued
        for cert in (nb, cs):
            if cert.witness is not None:
                agree = agree and q(cert.witness).denominator != 1
        rep.check("certification methods agree", agree, p=q)

        d = rng.randint(0, 10)
        start = rng.randint(-10, 10)
        r = RationalPolynomial()
        for k in range(d + 1):
            r = r + binomial_basis(k).shift(-start) * rng.randint(-15, 15)
        values_ok = all(r(x).denominator == 1 for x in range(start, start + d + 1))
        rep.check(
            "integral on d+1 consecutive -> integer-valued",
            values_ok and ivp.certify_integer_valued(r).is_integer_valued,
            p=r, start=start,
        )
    return rep


SUITES: dict[str, Callable[[VerifyConfig], VerifyReport]] = {
    "numerics": suite_numerics,
    "series": suite_series,
    "bernoulli": suite_bernoulli,
    "genocchi": suite_genocchi,
    "polynomials": suite_polynomials,
    "properties": suite_properties,
}


def run_suites(names: list[str], cfg: VerifyConfig | None = None) -> list[VerifyReport]:
    cfg = cfg or VerifyConfig()
    if "all" in names:
        names = list(SUITES)
    reports = []
    for name in names:
        if name not in SUITES:
            raise KeyError(f"unknown suite {name!r}")
        t0 = time.perf_counter()
        rep = SUITES[name](cfg)
        rep.seconds = time.perf_counter() - t0
        reports.append(rep)
    return reports
