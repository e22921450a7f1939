"""Dense univariate polynomials over exact rationals.

``ParamPoly`` stores coefficients by ascending degree in a list of ``Rat``;
the leading coefficient is nonzero unless the polynomial is zero (empty
list).  The variable is a purely symbolic tag (``t``, ``x``, ``n``, ``i``
depending on context) and does not affect arithmetic; operations require
matching tags so that polynomials in different parameters cannot be mixed
silently.

Degrees in this project stay small (<= ~60), so the dense representation is
the simple and fast choice.  Division is exact Euclidean division over the
field of rationals; ``poly_gcd`` returns the monic gcd.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .scalars import Rat, rat_to_str


class DomainError(ValueError):
    """Raised when an operation is applied outside its mathematical domain."""


class ParamPoly:
    """Univariate polynomial with Rat coefficients in a tagged parameter."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable[Rat | int] = (), var: str = "t"):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: list[Rat] = cs
        self.var = var

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, var: str = "t") -> "ParamPoly":
        return cls((), var)

    @classmethod
    def const(cls, c: Rat | int, var: str = "t") -> "ParamPoly":
        return cls((Fraction(c),), var)

    @classmethod
    def variable(cls, var: str = "t") -> "ParamPoly":
        return cls((0, 1), var)

    @classmethod
    def from_roots(cls, roots: Sequence[Rat | int], var: str = "t") -> "ParamPoly":
        """Monic polynomial with the given root multiset."""
        out = cls.const(1, var)
        for r in roots:
            out = out * cls((-Fraction(r), 1), var)
        return out

    # -- basic queries ----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Rat:
        if not self.coeffs:
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int) -> Rat:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def _check_var(self, other: "ParamPoly") -> None:
        if self.var != other.var and self.coeffs and other.coeffs:
            if self.degree > 0 and other.degree > 0:
                raise DomainError(f"variable mismatch: {self.var} vs {other.var}")

    # -- arithmetic -------------------------------------------------------

    def _result_var(self, other: "ParamPoly") -> str:
        if self.degree > 0:
            return self.var
        if other.degree > 0:
            return other.var
        return self.var

    def __add__(self, other: "ParamPoly") -> "ParamPoly":
        self._check_var(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return ParamPoly(
            (self.coeff(k) + other.coeff(k) for k in range(n)),
            self._result_var(other),
        )

    def __sub__(self, other: "ParamPoly") -> "ParamPoly":
        return self + (-other)

    def __neg__(self) -> "ParamPoly":
        return ParamPoly((-c for c in self.coeffs), self.var)

    def __mul__(self, other: "ParamPoly") -> "ParamPoly":
        self._check_var(other)
        if self.is_zero() or other.is_zero():
            return ParamPoly.zero(self._result_var(other))
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for a, ca in enumerate(self.coeffs):
            if ca == 0:
                continue
            for b, cb in enumerate(other.coeffs):
                out[a + b] += ca * cb
        return ParamPoly(out, self._result_var(other))

    def scale(self, c: Rat | int) -> "ParamPoly":
        c = Fraction(c)
        return ParamPoly((a * c for a in self.coeffs), self.var)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ParamPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(tuple(self.coeffs))

    def divmod(self, divisor: "ParamPoly") -> tuple["ParamPoly", "ParamPoly"]:
        """Euclidean division: self = q*divisor + r with deg r < deg divisor."""
        if divisor.is_zero():
            raise DomainError("division by the zero polynomial")
        self._check_var(divisor)
        rem = list(self.coeffs)
        dd = divisor.degree
        lead = divisor.leading()
        q = [Fraction(0)] * max(len(rem) - dd, 0)
        for k in range(len(rem) - dd - 1, -1, -1):
            c = rem[k + dd] / lead
            if c == 0:
                continue
            q[k] = c
            for s, dc in enumerate(divisor.coeffs):
                rem[k + s] -= c * dc
        return ParamPoly(q, self.var), ParamPoly(rem[:dd], self.var)

    def divexact(self, divisor: "ParamPoly") -> "ParamPoly":
        q, r = self.divmod(divisor)
        if not r.is_zero():
            raise DomainError("division is not exact")
        return q

    def __mod__(self, divisor: "ParamPoly") -> "ParamPoly":
        return self.divmod(divisor)[1]

    def monic(self) -> "ParamPoly":
        if self.is_zero():
            return self
        return self.scale(1 / self.leading())

    # -- evaluation / composition -----------------------------------------

    def evaluate(self, x: Rat | int) -> Rat:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "ParamPoly") -> "ParamPoly":
        """self(inner), result in inner's variable."""
        acc = ParamPoly.zero(inner.var)
        for c in reversed(self.coeffs):
            acc = acc * inner + ParamPoly.const(c, inner.var)
        return acc

    def compose_affine(self, const: Rat | int, lin: Rat | int) -> "ParamPoly":
        """self(const + lin*t) in the same variable."""
        return self.compose(ParamPoly((Fraction(const), Fraction(lin)), self.var))

    def shift_var(self, delta: Rat | int) -> "ParamPoly":
        """self(t + delta)."""
        return self.compose_affine(delta, 1)

    # -- misc ---------------------------------------------------------------

    def content(self) -> Rat:
        """gcd of numerators over lcm of denominators (0 for the zero poly)."""
        if self.is_zero():
            return Fraction(0)
        num = 0
        den = 1
        for c in self.coeffs:
            num = _igcd(num, c.numerator)
            den = den * c.denominator // _igcd(den, c.denominator)
        return Fraction(num, den)

    def primitive(self) -> "ParamPoly":
        """Integer-coefficient multiple with coprime coefficients, sign of lead > 0."""
        if self.is_zero():
            return self
        p = self.scale(1 / self.content())
        if p.leading() < 0:
            p = -p
        return p

    def __repr__(self) -> str:
        return f"ParamPoly({self.coeffs!r}, var={self.var!r})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            cs = rat_to_str(c)
            if k == 0:
                parts.append(cs)
            else:
                mono = self.var if k == 1 else f"{self.var}^{k}"
                parts.append(mono if cs == "1" else f"-{mono}" if cs == "-1" else f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _igcd(a: int, b: int) -> int:
    return math.gcd(a, b)


def binom_poly(shift: Rat | int, k: int, var: str = "t") -> ParamPoly:
    """The degree-k polynomial C(t + shift, k); shift may be any rational."""
    return binom_affine(shift, 1, k, var)


def binom_affine(const: Rat | int, lin: Rat | int, k: int, var: str = "t") -> ParamPoly:
    """C(const + lin*t, k) = prod_{s<k} (const + lin*t - s) / k!."""
    if k < 0:
        raise DomainError(f"binomial lower index must be >= 0, got {k}")
    const = Fraction(const)
    lin = Fraction(lin)
    out = ParamPoly.const(1, var)
    for s in range(k):
        out = out * ParamPoly((const - s, lin), var)
    return out.scale(Fraction(1, math.factorial(k)))


def _int_primitive(p: ParamPoly) -> list[int]:
    """Integer-primitive coefficient list (positive leading coefficient)."""
    c = p.content()
    q = p.scale(1 / c)
    out = [int(x) for x in q.coeffs]
    if out and out[-1] < 0:
        out = [-x for x in out]
    return out


def _int_pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of integer polynomials (lc(b)-scaled remainder)."""
    rem = list(a)
    db = len(b) - 1
    lead = b[-1]
    while len(rem) - 1 >= db and rem:
        k = len(rem) - 1 - db
        top = rem[-1]
        rem = [lead * c for c in rem]
        for s in range(db + 1):
            rem[k + s] -= top * b[s]
        while rem and rem[-1] == 0:
            rem.pop()
    return rem


def _int_content_free(c: list[int]) -> list[int]:
    g = 0
    for x in c:
        g = math.gcd(g, x)
    if g > 1:
        c = [x // g for x in c]
    if c and c[-1] < 0:
        c = [-x for x in c]
    return c


def poly_gcd(a: ParamPoly, b: ParamPoly) -> ParamPoly:
    """Monic gcd via the primitive pseudo-remainder sequence (exact, and far
    tamer coefficient growth than naive Euclid over the rationals).
    Errors if both arguments are zero."""
    if a.is_zero() and b.is_zero():
        raise DomainError("gcd(0, 0) is undefined")
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    x, y = _int_primitive(a), _int_primitive(b)
    if len(x) < len(y):
        x, y = y, x
    while y:
        x, y = y, _int_content_free(_int_pseudo_rem(x, y))
    var = a.var if a.degree > 0 else b.var
    return ParamPoly([Fraction(c) for c in x], var).monic()


def root_multiplicity(f: ParamPoly, r: Rat | int) -> int:
    """Largest k with (x - r)^k dividing f; f must be nonzero."""
    if f.is_zero():
        raise DomainError("root multiplicity of the zero polynomial")
    factor = ParamPoly((-Fraction(r), 1), f.var)
    k = 0
    while True:
        q, rem = f.divmod(factor)
        if not rem.is_zero():
            return k
        f = q
        k += 1
