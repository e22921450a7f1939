"""Sparse bivariate polynomials and exact rational functions.

``BiPoly`` maps exponent pairs ``(deg_n, deg_i)`` to nonzero ``Rat``
coefficients; the zero polynomial is the empty map.  Both variables are
formal: ``n`` is the outer recurrence parameter, ``i`` the summation index.

``RatFunc`` is a quotient num/den where both parts are the same kind
(ParamPoly for the univariate function field, BiPoly for two-parameter
certificates).  Univariate quotients reduce by gcd and keep a monic
denominator, so they form an honest computational field; bivariate
quotients are only normalized by scalar content, and equality is decided
by cross-multiplication of cleared forms.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping

from .polynomials import DomainError, ParamPoly, poly_gcd
from .scalars import Rat, rat_to_str


class BiPoly:
    """Polynomial in (n, i) with Rat coefficients, sparse by exponent pair."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], Rat | int] | None = None):
        out: dict[tuple[int, int], Rat] = {}
        if terms:
            for e, c in terms.items():
                c = Fraction(c)
                if c != 0:
                    out[(int(e[0]), int(e[1]))] = c
        self.terms = out

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls()

    @classmethod
    def const(cls, c: Rat | int) -> "BiPoly":
        return cls({(0, 0): Fraction(c)})

    @classmethod
    def affine(cls, c0: Rat | int, cn: Rat | int, ci: Rat | int) -> "BiPoly":
        """c0 + cn*n + ci*i."""
        return cls({(0, 0): Fraction(c0), (1, 0): Fraction(cn), (0, 1): Fraction(ci)})

    @classmethod
    def from_n_poly(cls, p: ParamPoly) -> "BiPoly":
        return cls({(k, 0): c for k, c in enumerate(p.coeffs)})

    @classmethod
    def from_i_poly(cls, p: ParamPoly) -> "BiPoly":
        return cls({(0, k): c for k, c in enumerate(p.coeffs)})

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def deg_n(self) -> int:
        return max((e[0] for e in self.terms), default=-1)

    def deg_i(self) -> int:
        return max((e[1] for e in self.terms), default=-1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "BiPoly") -> "BiPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, Fraction(0)) + c
            if v == 0:
                out.pop(e, None)
            else:
                out[e] = v
        r = BiPoly.__new__(BiPoly)
        r.terms = out
        return r

    def __neg__(self) -> "BiPoly":
        r = BiPoly.__new__(BiPoly)
        r.terms = {e: -c for e, c in self.terms.items()}
        return r

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        return self + (-other)

    def __mul__(self, other: "BiPoly") -> "BiPoly":
        out: dict[tuple[int, int], Rat] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                e = (a1 + a2, b1 + b2)
                v = out.get(e, Fraction(0)) + c1 * c2
                if v == 0:
                    out.pop(e, None)
                else:
                    out[e] = v
        r = BiPoly.__new__(BiPoly)
        r.terms = out
        return r

    def scale(self, c: Rat | int) -> "BiPoly":
        c = Fraction(c)
        if c == 0:
            return BiPoly.zero()
        r = BiPoly.__new__(BiPoly)
        r.terms = {e: v * c for e, v in self.terms.items()}
        return r

    # -- substitution / evaluation -----------------------------------------

    def shift_i(self, delta: int) -> "BiPoly":
        """Substitute i -> i + delta."""
        if delta == 0:
            return self
        out = BiPoly.zero()
        for (a, b), c in self.terms.items():
            # (i + delta)^b expanded binomially
            for r in range(b + 1):
                out += BiPoly({(a, r): c * math.comb(b, r) * Fraction(delta) ** (b - r)})
        return out

    def shift_n(self, delta: int) -> "BiPoly":
        """Substitute n -> n + delta."""
        if delta == 0:
            return self
        out = BiPoly.zero()
        for (a, b), c in self.terms.items():
            for r in range(a + 1):
                out += BiPoly({(r, b): c * math.comb(a, r) * Fraction(delta) ** (a - r)})
        return out

    def evaluate(self, n_val: Rat | int, i_val: Rat | int) -> Rat:
        n_val, i_val = Fraction(n_val), Fraction(i_val)
        acc = Fraction(0)
        for (a, b), c in self.terms.items():
            acc += c * n_val**a * i_val**b
        return acc

    def eval_n(self, n_val: Rat | int) -> ParamPoly:
        """Specialize n, leaving a polynomial in i."""
        n_val = Fraction(n_val)
        deg = self.deg_i()
        coeffs = [Fraction(0)] * (deg + 1)
        for (a, b), c in self.terms.items():
            coeffs[b] += c * n_val**a
        return ParamPoly(coeffs, var="i")

    def to_i_coeffs(self) -> list[ParamPoly]:
        """Coefficients of powers of i, each a polynomial in n (ascending)."""
        deg = self.deg_i()
        rows: list[dict[int, Rat]] = [dict() for _ in range(deg + 1)]
        for (a, b), c in self.terms.items():
            rows[b][a] = c
        out = []
        for row in rows:
            size = max(row, default=-1) + 1
            coeffs = [row.get(k, Fraction(0)) for k in range(size)]
            out.append(ParamPoly(coeffs, var="n"))
        return out

    def content(self) -> Rat:
        if not self.terms:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.terms.values():
            num = math.gcd(num, c.numerator)
            den = den * c.denominator // math.gcd(den, c.denominator)
        return Fraction(num, den)

    def __repr__(self) -> str:
        return f"BiPoly({self.terms!r})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (a, b) in sorted(self.terms, reverse=True):
            c = self.terms[(a, b)]
            mono = "*".join(
                ([f"n^{a}" if a > 1 else "n"] if a else []) + ([f"i^{b}" if b > 1 else "i"] if b else [])
            )
            cs = rat_to_str(c)
            parts.append(f"{cs}*{mono}" if mono else cs)
        return " + ".join(parts).replace("+ -", "- ")


class RatFunc:
    """Exact quotient of two polynomials of the same kind (never zero below)."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = ParamPoly.const(1, num.var) if isinstance(num, ParamPoly) else BiPoly.const(1)
        if den.is_zero():
            raise DomainError("rational function with zero denominator")
        if isinstance(num, ParamPoly) != isinstance(den, ParamPoly):
            raise DomainError("numerator and denominator kinds differ")
        if isinstance(num, ParamPoly):
            if not num.is_zero():
                g = poly_gcd(num, den)
                if g.degree > 0:
                    num = num.divexact(g)
                    den = den.divexact(g)
            lead = den.leading()
            if lead != 1:
                num = num.scale(1 / lead)
                den = den.scale(1 / lead)
        else:
            c = den.content()
            if c not in (0, 1):
                num = num.scale(1 / c)
                den = den.scale(1 / c)
        self.num = num
        self.den = den

    @classmethod
    def of(cls, value) -> "RatFunc":
        if isinstance(value, RatFunc):
            return value
        return cls(value)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * other.den - other.num * self.den, self.den * other.den)

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __mul__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RatFunc") -> "RatFunc":
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RatFunc):
            return NotImplemented
        return (self.num * other.den - other.num * self.den).is_zero()

    def __hash__(self) -> int:  # pragma: no cover - not used as dict key
        return hash((type(self.num).__name__,))

    def __repr__(self) -> str:
        return f"RatFunc({self.num!s} / {self.den!s})"
