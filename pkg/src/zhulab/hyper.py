"""Proper hypergeometric terms in two integer variables.

A term is ``(-1)^{e0 + en*n + ei*i}`` times a product of binomial factors
``C(top, bottom)`` whose top and bottom are affine forms in (n, i) with
integer coefficients.  Such terms have exact shift quotients
``F(n, i+1)/F(n, i)`` and ``F(n+1, i)/F(n, i)`` that are rational functions
of (n, i), assembled here from the four elementary binomial step identities

    C(T, B+1)/C(T, B) = (T-B)/(B+1)      C(T+1, B)/C(T, B) = (T+1)/(T+1-B)
    C(T, B-1)/C(T, B) = B/(T-B+1)        C(T-1, B)/C(T, B) = (T-B)/T

with every affine factor cancelled against the other side before the
products are multiplied out, so the returned quotient is fully reduced.

Pointwise evaluation uses the support convention: a binomial with negative
lower index is 0, so sums "over all of Z" are finite.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .bipoly import BiPoly, RatFunc
from .polynomials import DomainError
from .scalars import Rat, binom_support


@dataclass(frozen=True)
class Affine:
    """c0 + cn*n + ci*i with integer coefficients."""

    c0: int
    cn: int = 0
    ci: int = 0

    def value(self, n: int, i: int) -> int:
        return self.c0 + self.cn * n + self.ci * i

    def bipoly(self) -> BiPoly:
        return BiPoly.affine(self.c0, self.cn, self.ci)

    def shifted(self, dn: int, di: int) -> "Affine":
        return Affine(self.c0 + self.cn * dn + self.ci * di, self.cn, self.ci)


@dataclass(frozen=True)
class BinomFactor:
    top: Affine
    bottom: Affine


@dataclass(frozen=True)
class HyperTerm:
    """(-1)^sign(n,i) times a product of affine-argument binomials."""

    sign: Affine
    factors: tuple[BinomFactor, ...]

    def value(self, n: int, i: int) -> Rat:
        out = Fraction(-1 if self.sign.value(n, i) % 2 else 1)
        for f in self.factors:
            out *= binom_support(f.top.value(n, i), f.bottom.value(n, i))
            if out == 0:
                return Fraction(0)
        return out


# -- shift quotient assembly -------------------------------------------------


def _affine_steps(top: Affine, bottom: Affine, d_top: int, d_bot: int):
    """Numerator/denominator affine factors of C(top+d_top, bottom+d_bot)/C(top, bottom)."""
    num: list[Affine] = []
    den: list[Affine] = []
    t, b = top, bottom
    step = 1 if d_top > 0 else -1
    for _ in range(abs(d_top)):
        if step > 0:
            # C(T+1, B)/C(T, B) = (T+1)/(T+1-B)
            num.append(Affine(t.c0 + 1, t.cn, t.ci))
            den.append(Affine(t.c0 + 1 - b.c0, t.cn - b.cn, t.ci - b.ci))
        else:
            # C(T-1, B)/C(T, B) = (T-B)/T
            num.append(Affine(t.c0 - b.c0, t.cn - b.cn, t.ci - b.ci))
            den.append(t)
        t = Affine(t.c0 + step, t.cn, t.ci)
    step = 1 if d_bot > 0 else -1
    for _ in range(abs(d_bot)):
        if step > 0:
            # C(T, B+1)/C(T, B) = (T-B)/(B+1)
            num.append(Affine(t.c0 - b.c0, t.cn - b.cn, t.ci - b.ci))
            den.append(Affine(b.c0 + 1, b.cn, b.ci))
        else:
            # C(T, B-1)/C(T, B) = B/(T-B+1)
            num.append(b)
            den.append(Affine(t.c0 - b.c0 + 1, t.cn - b.cn, t.ci - b.ci))
        b = Affine(b.c0 + step, b.cn, b.ci)
    return num, den


def _normalize_affine(a: Affine) -> tuple[tuple[int, int, int], Fraction]:
    """Primitive representative and the scalar relating a to it."""
    g = math.gcd(math.gcd(abs(a.c0), abs(a.cn)), abs(a.ci))
    if g == 0:
        return (0, 0, 0), Fraction(0)
    lead = next(c for c in (a.cn, a.ci, a.c0) if c != 0)
    if lead < 0:
        g = -g
    return (a.c0 // g, a.cn // g, a.ci // g), Fraction(g)


def shift_ratio(term: HyperTerm, var: str) -> RatFunc:
    """F(n, i+1)/F(n, i) for var "i", or F(n+1, i)/F(n, i) for var "n"."""
    if var not in ("n", "i"):
        raise DomainError(f"shift variable must be 'n' or 'i', got {var!r}")
    dn, di = (1, 0) if var == "n" else (0, 1)
    num_factors: list[Affine] = []
    den_factors: list[Affine] = []
    for f in term.factors:
        d_top = f.top.cn * dn + f.top.ci * di
        d_bot = f.bottom.cn * dn + f.bottom.ci * di
        nf, df = _affine_steps(f.top, f.bottom, d_top, d_bot)
        num_factors.extend(nf)
        den_factors.extend(df)

    scalar = Fraction(-1 if (term.sign.cn * dn + term.sign.ci * di) % 2 else 1)
    # cancel affine factors shared (up to scalar) between the two sides
    den_keys = []
    for a in den_factors:
        key, s = _normalize_affine(a)
        if s == 0:
            raise DomainError("zero affine factor in denominator of shift quotient")
        den_keys.append((key, s))
    remaining_num: list[Affine] = []
    for a in num_factors:
        key, s = _normalize_affine(a)
        if s == 0:
            scalar = Fraction(0)
            continue
        for k, (dkey, ds) in enumerate(den_keys):
            if dkey == key:
                scalar *= s / ds
                den_keys.pop(k)
                break
        else:
            remaining_num.append(a)

    num = BiPoly.const(scalar)
    for a in remaining_num:
        num = num * a.bipoly()
    den = BiPoly.const(1)
    for key, s in den_keys:
        den = den * BiPoly.affine(*[s * c for c in key])
    return RatFunc(num, den)


def shift_ratio_n_steps(term: HyperTerm, steps: int) -> RatFunc:
    """F(n+steps, i)/F(n, i) for steps >= 0, as a reduced rational function."""
    if steps < 0:
        raise DomainError("only forward shifts are supported")
    one = RatFunc(BiPoly.const(1), BiPoly.const(1))
    if steps == 0:
        return one
    base = shift_ratio(term, "n")
    out = one
    num, den = base.num, base.den
    for s in range(steps):
        out = out * RatFunc(num.shift_n(s), den.shift_n(s))
    return out


# -- direct summation ---------------------------------------------------------


def definite_sum(term: HyperTerm, lower: Affine, upper: Affine, n: int) -> Rat:
    """Exact sum of term values over i in [lower(n), upper(n)]; empty range is 0."""
    lo = lower.value(n, 0)
    hi = upper.value(n, 0)
    total = Fraction(0)
    for i in range(lo, hi + 1):
        total += term.value(n, i)
    return total


# -- wire format ---------------------------------------------------------------


def _affine_to_json(a: Affine) -> dict:
    return {"c0": a.c0, "cn": a.cn, "ci": a.ci}


def _affine_from_json(doc: dict) -> Affine:
    return Affine(int(doc.get("c0", 0)), int(doc.get("cn", 0)), int(doc.get("ci", 0)))


def term_to_json(term: HyperTerm) -> dict:
    return {
        "sign": _affine_to_json(term.sign),
        "factors": [
            {"top": _affine_to_json(f.top), "bottom": _affine_to_json(f.bottom)}
            for f in term.factors
        ],
    }


def term_from_json(doc: dict) -> HyperTerm:
    try:
        sign = _affine_from_json(doc["sign"])
        factors = tuple(
            BinomFactor(_affine_from_json(f["top"]), _affine_from_json(f["bottom"]))
            for f in doc["factors"]
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise DomainError(f"malformed hypergeometric term document: {exc}") from exc
    return HyperTerm(sign=sign, factors=factors)


def term_loads(text: str) -> HyperTerm:
    return term_from_json(json.loads(text))


def term_dumps(term: HyperTerm) -> str:
    return json.dumps(term_to_json(term), indent=2, sort_keys=True)


# -- catalog -------------------------------------------------------------------


def alt3_binomial_term() -> HyperTerm:
    """(-1)^i C(-2n-1, i) C(-2n-1, 2n-i) C(2n, i): summand of the alternating
    three-binomial sum with value (-1)^n (3n)!/n!^3 over i in 0..2n."""
    return HyperTerm(
        sign=Affine(0, 0, 1),
        factors=(
            BinomFactor(Affine(-1, -2, 0), Affine(0, 0, 1)),
            BinomFactor(Affine(-1, -2, 0), Affine(0, 2, -1)),
            BinomFactor(Affine(0, 2, 0), Affine(0, 0, 1)),
        ),
    )


def triplet_linear_term() -> HyperTerm:
    """(-1)^i C(2n, i) C(-2n, 2n-1-i) C(-2n, i-1): summand of the sum giving
    the linear coefficient of the triplet constant-term polynomial."""
    return HyperTerm(
        sign=Affine(0, 0, 1),
        factors=(
            BinomFactor(Affine(0, 2, 0), Affine(0, 0, 1)),
            BinomFactor(Affine(0, -2, 0), Affine(-1, 2, -1)),
            BinomFactor(Affine(0, -2, 0), Affine(-1, 0, 1)),
        ),
    )


def twisted_linear_term() -> HyperTerm:
    """(-1)^i C(-2n-1, 2n-i-1) C(-2n-1, i) C(2n, i): summand of the twisted
    companion sum, equal to -1/2 of the alternating three-binomial sum."""
    return HyperTerm(
        sign=Affine(0, 0, 1),
        factors=(
            BinomFactor(Affine(-1, -2, 0), Affine(-1, 2, -1)),
            BinomFactor(Affine(-1, -2, 0), Affine(0, 0, 1)),
            BinomFactor(Affine(0, 2, 0), Affine(0, 0, 1)),
        ),
    )


def sum_closed_form(m: int) -> Rat:
    """(-1)^m (3m)! / m!^3."""
    sign = -1 if m % 2 else 1
    return Fraction(sign * math.factorial(3 * m), math.factorial(m) ** 3)


def linear_sum_closed_form(p: int) -> Rat:
    """(-1)^p 2 (3p-2)! / ((2p-1) (p-1)!^3)."""
    sign = -1 if p % 2 else 1
    return Fraction(2 * sign * math.factorial(3 * p - 2), (2 * p - 1) * math.factorial(p - 1) ** 3)
