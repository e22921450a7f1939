"""Creative telescoping with exact certificates.

Everything here reduces definite sums of hypergeometric terms F(n, i) to
first-order recurrences: find polynomials a_0(n), a_1(n) and a rational
multiplier G(n, i) such that

    a_1(n) F(n+1, i) + a_0(n) F(n, i)  =  R(n, i+1) - R(n, i),
    R(n, i) = G(n, i) F(n, i),

as an identity of rational functions (divide through by F(n, i) and clear
denominators).  ``verify_certificate`` checks such identities exactly;
``zeilberger_order1`` searches for them with Gosper's algorithm as the inner
solver, working over the univariate rational-function field in n.  Search
results are re-verified before they are returned, never trusted.

Degree bounds follow a fixed policy: recurrence coefficients up to degree 4
in n, Gosper/telescoping numerator up to degree 8 in i.  A failed search
means "not found at these bounds" and is reported as absence, never as a
silent wrong answer.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .bipoly import BiPoly, RatFunc
from .hyper import HyperTerm, shift_ratio, shift_ratio_n_steps
from .polynomials import DomainError, ParamPoly, poly_gcd
from .scalars import Rat, rat_from_str, rat_to_str

COEFF_DEGREE_BOUND = 4
GOSPER_DEGREE_BOUND = 8


class SingularRecurrenceError(ValueError):
    """Leading recurrence coefficient vanished at a step that was needed."""

    def __init__(self, n: int):
        super().__init__(f"leading coefficient vanishes at n={n}")
        self.n = n


# ---------------------------------------------------------------------------
# The coefficient field K = rational functions of n
# ---------------------------------------------------------------------------


def _k(num: ParamPoly, den: ParamPoly | None = None) -> RatFunc:
    return RatFunc(num, den)


def _k_const(c: Rat | int) -> RatFunc:
    return RatFunc(ParamPoly.const(c, "n"))


K_ZERO = _k_const(0)
K_ONE = _k_const(1)


class KPoly:
    """Dense polynomial in i whose coefficients are rational functions of n."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = list(coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = cs

    @classmethod
    def const(cls, c: RatFunc) -> "KPoly":
        return cls([c])

    @classmethod
    def one(cls) -> "KPoly":
        return cls([K_ONE])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> RatFunc:
        return self.coeffs[-1]

    def coeff(self, k: int) -> RatFunc:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else K_ZERO

    def __add__(self, other: "KPoly") -> "KPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return KPoly([self.coeff(k) + other.coeff(k) for k in range(n)])

    def __sub__(self, other: "KPoly") -> "KPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return KPoly([self.coeff(k) - other.coeff(k) for k in range(n)])

    def __neg__(self) -> "KPoly":
        return KPoly([-c for c in self.coeffs])

    def __mul__(self, other: "KPoly") -> "KPoly":
        if self.is_zero() or other.is_zero():
            return KPoly([])
        out = [K_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for a, ca in enumerate(self.coeffs):
            if ca.is_zero():
                continue
            for b, cb in enumerate(other.coeffs):
                out[a + b] = out[a + b] + ca * cb
        return KPoly(out)

    def scale(self, c: RatFunc) -> "KPoly":
        return KPoly([x * c for x in self.coeffs])

    def monic(self) -> "KPoly":
        if self.is_zero():
            return self
        inv = K_ONE / self.leading()
        return self.scale(inv)

    def divmod(self, other: "KPoly") -> tuple["KPoly", "KPoly"]:
        if other.is_zero():
            raise DomainError("division by the zero polynomial")
        rem = list(self.coeffs)
        dd = other.degree
        q = [K_ZERO] * max(len(rem) - dd, 0)
        for k in range(len(rem) - dd - 1, -1, -1):
            c = rem[k + dd] / other.leading()
            if c.is_zero():
                continue
            q[k] = c
            for s, oc in enumerate(other.coeffs):
                rem[k + s] = rem[k + s] - c * oc
        return KPoly(q), KPoly(rem[:dd])

    def __truediv__(self, other: "KPoly") -> "KPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise DomainError("division is not exact")
        return q

    def gcd(self, other: "KPoly") -> "KPoly":
        a, b = self, other
        if a.is_zero() and b.is_zero():
            raise DomainError("gcd(0, 0) is undefined")
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        return a.monic()

    def shift(self, delta: int) -> "KPoly":
        """Substitute i -> i + delta."""
        if delta == 0 or self.is_zero():
            return self
        d = Fraction(delta)
        out = [K_ZERO] * len(self.coeffs)
        for k, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            for r in range(k + 1):
                out[r] = out[r] + c * _k_const(math.comb(k, r) * d ** (k - r))
        return KPoly(out)

    def to_bipoly_pair(self) -> tuple[BiPoly, ParamPoly]:
        """(P, L) with P a bivariate polynomial and self = P / L, L in n only."""
        lcm = ParamPoly.const(1, "n")
        for c in self.coeffs:
            if c.is_zero():
                continue
            g = poly_gcd(lcm, c.den)
            lcm = lcm * c.den.divexact(g)
        out = BiPoly.zero()
        for k, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            p = c.num * lcm.divexact(c.den)
            out = out + BiPoly.from_n_poly(p) * BiPoly({(0, k): 1})
        return out, lcm


def ratfunc_to_kpolys(rf: RatFunc) -> tuple[KPoly, KPoly]:
    """Split a bivariate quotient into reduced numerator/denominator in K[i]."""
    num = KPoly([_k(p) for p in rf.num.to_i_coeffs()])
    den = KPoly([_k(p) for p in rf.den.to_i_coeffs()])
    if not num.is_zero():
        g = num.gcd(den)
        if g.degree > 0:
            num = num / g
            den = den / g
    return num, den


# ---------------------------------------------------------------------------
# Dispersion: shifts j >= 0 with gcd(A(i), B(i+j)) nontrivial
# ---------------------------------------------------------------------------


def _qpoly_trim(c: list[Fraction]) -> list[Fraction]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _qpoly_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    db = len(b) - 1
    while len(a) - 1 >= db:
        f = a[-1] / b[-1]
        off = len(a) - 1 - db
        for s in range(db + 1):
            a[off + s] -= f * b[s]
        _qpoly_trim(a)
        if not a:
            break
    return a

def _qpoly_gcd_degree(a: list[Fraction], b: list[Fraction]) -> int:
    a, b = _qpoly_trim(list(a)), _qpoly_trim(list(b))
    while b:
        a, b = b, _qpoly_rem(a, b)
    return len(a) - 1


def _qpoly_shift(c: list[Fraction], j: int) -> list[Fraction]:
    out = [Fraction(0)] * len(c)
    for k, ck in enumerate(c):
        if ck == 0:
            continue
        for r in range(k + 1):
            out[r] += ck * math.comb(k, r) * Fraction(j) ** (k - r)
    return _qpoly_trim(out)


def _specialize(coeffs: list[ParamPoly], n0: int) -> list[Fraction]:
    return _qpoly_trim([p.evaluate(n0) for p in coeffs])


def _lagrange_root_bound(monic: list[Fraction]) -> float:
    """Upper bound on root moduli of a monic rational polynomial:
    2 * max_k |c_{d-k}|^{1/k}."""
    d = len(monic) - 1
    best = 0.0
    for k in range(1, d + 1):
        c = abs(monic[d - k])
        if c:
            best = max(best, float(c) ** (1.0 / k))
    return 2.0 * best


def _cleared_coeffs(p: KPoly) -> list[ParamPoly]:
    bip, _ = p.to_bipoly_pair()
    return bip.to_i_coeffs()


def dispersion_set(A: KPoly, B: KPoly) -> list[int]:
    """All j >= 0 with deg gcd(A(i), B(i+j)) > 0, certified over K.

    Candidates come from a specialization of n at which both leading
    coefficients survive (so no true shift can be missed), bounded by the
    Cauchy root bounds of the specialized polynomials; each candidate is then
    confirmed or rejected by an exact gcd over K.
    """
    if A.degree < 1 or B.degree < 1:
        return []
    ca, cb = _cleared_coeffs(A), _cleared_coeffs(B)
    lead_a, lead_b = ca[-1], cb[-1]
    n0 = 1
    while lead_a.evaluate(n0) == 0 or lead_b.evaluate(n0) == 0:
        n0 += 1
    a0 = _specialize(ca, n0)
    b0 = _specialize(cb, n0)
    a0 = [c / a0[-1] for c in a0]
    b0 = [c / b0[-1] for c in b0]
    j_max = math.ceil(_lagrange_root_bound(a0) + _lagrange_root_bound(b0)) + 1
    out = []
    for j in range(j_max + 1):
        if _qpoly_gcd_degree(a0, _qpoly_shift(b0, j)) > 0:
            if A.gcd(B.shift(j)).degree > 0:
                out.append(j)
    return out


# ---------------------------------------------------------------------------
# Gosper's algorithm over K
# ---------------------------------------------------------------------------


def gosper_normal(num: KPoly, den: KPoly) -> tuple[KPoly, KPoly, KPoly]:
    """Write num/den = (a(i)/b(i)) * (c(i+1)/c(i)) with gcd(a(i), b(i+h)) = 1
    for every natural h; the constant is absorbed into a."""
    z = num.leading() / den.leading()
    a = num.monic()
    b = den.monic()
    c = KPoly.one()
    for j in dispersion_set(a, b):
        g = a.gcd(b.shift(j))
        if g.degree < 1:
            continue
        a = a / g
        b = b / g.shift(-j)
        for ell in range(1, j + 1):
            c = c * g.shift(-ell)
    return a.scale(z), b, c


def _row_clear(row: list[RatFunc]) -> list[ParamPoly]:
    """Scale a row of rational functions to integer-primitive polynomials."""
    lcm = ParamPoly.const(1, "n")
    for e in row:
        if e.is_zero():
            continue
        g = poly_gcd(lcm, e.den)
        lcm = lcm * e.den.divexact(g)
    polys = [
        (e.num * lcm.divexact(e.den)) if not e.is_zero() else ParamPoly.zero("n") for e in row
    ]
    return _row_primitive(polys)


def _row_primitive(polys: list[ParamPoly]) -> list[ParamPoly]:
    num = 0
    den = 1
    for p in polys:
        if p.is_zero():
            continue
        c = p.content()
        num = math.gcd(num, c.numerator)
        den = den * c.denominator // math.gcd(den, c.denominator)
    if num == 0:
        return polys
    scale = Fraction(den, num)
    return [p.scale(scale) for p in polys]


def _solve_linear(columns: list[list[RatFunc]], rhs: list[RatFunc]) -> list[RatFunc] | None:
    """One solution of columns * x = rhs over K, or None.

    Fraction-free forward elimination on denominator-cleared rows (content
    removed after every combination) followed by back-substitution in K keeps
    the intermediate coefficient growth polynomial."""
    rows = len(rhs)
    cols = len(columns)
    mat = [_row_clear([columns[c][r] for c in range(cols)] + [rhs[r]]) for r in range(rows)]
    piv_cols: list[int] = []
    r = 0
    for c in range(cols):
        piv = next((k for k in range(r, rows) if not mat[k][c].is_zero()), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        for k in range(r + 1, rows):
            if mat[k][c].is_zero():
                continue
            lead, kill = mat[r][c], mat[k][c]
            mat[k] = _row_primitive(
                [x * lead - y * kill for x, y in zip(mat[k], mat[r])]
            )
        piv_cols.append(c)
        r += 1
        if r == rows:
            break
    for k in range(r, rows):
        if not mat[k][cols].is_zero():
            return None
    x = [K_ZERO] * cols
    for row in range(len(piv_cols) - 1, -1, -1):
        c = piv_cols[row]
        acc = _k(mat[row][cols])
        for c2 in range(c + 1, cols):
            if not mat[row][c2].is_zero() and not x[c2].is_zero():
                acc = acc - _k(mat[row][c2]) * x[c2]
        x[c] = acc / _k(mat[row][c])
    return x


def _gosper_solve(a: KPoly, b: KPoly, c: KPoly, degree_bound: int) -> KPoly | None:
    """Polynomial X with a(i) X(i+1) - b(i-1) X(i) = c(i), deg X <= bound."""
    b1 = b.shift(-1)
    columns = []
    height = 0
    col_polys = []
    for d in range(degree_bound + 1):
        mono = KPoly([K_ZERO] * d + [K_ONE])
        col = a * mono.shift(1) - b1 * mono
        col_polys.append(col)
        height = max(height, col.degree + 1)
    height = max(height, c.degree + 1)
    columns = [[col.coeff(r) for r in range(height)] for col in col_polys]
    rhs = [c.coeff(r) for r in range(height)]
    x = _solve_linear(columns, rhs)
    if x is None:
        return None
    return KPoly(x)


def _kpoly_quotient_to_ratfunc(num: KPoly, den: KPoly) -> RatFunc:
    bn, ln = num.to_bipoly_pair()
    bd, ld = den.to_bipoly_pair()
    return RatFunc(bn * BiPoly.from_n_poly(ld), bd * BiPoly.from_n_poly(ln))


def gosper(ratio: RatFunc, degree_bound: int = GOSPER_DEGREE_BOUND) -> RatFunc | None:
    """Certificate y(i) with y(i+1) ratio(i) - y(i) = 1, if one exists with
    numerator degree within the bound; None otherwise.

    A term t(i) with t(i+1)/t(i) = ratio then telescopes: T = y t satisfies
    T(i+1) - T(i) = t(i).  Absence is a value (bound exhausted), not an error.
    """
    num, den = ratfunc_to_kpolys(ratio)
    if num.is_zero():
        raise DomainError("ratio of a hypergeometric term cannot be zero")
    a, b, c = gosper_normal(num, den)
    x = _gosper_solve(a, b, c, degree_bound)
    if x is None:
        return None
    y = _kpoly_quotient_to_ratfunc(b.shift(-1) * x, c)
    one = RatFunc(BiPoly.const(1))
    check = RatFunc(y.num.shift_i(1), y.den.shift_i(1)) * ratio - y
    if not (check - one).is_zero():
        raise RuntimeError("internal error: Gosper solution failed re-verification")
    return y


# ---------------------------------------------------------------------------
# Certificates and their verification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Certificate:
    """Recurrence coefficients a_j(n) (ascending shift) plus multiplier G(n, i)."""

    coefficients: tuple[ParamPoly, ...]
    multiplier: RatFunc


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    discrepancy: RatFunc | None

    def __bool__(self) -> bool:
        return self.ok


def verify_certificate(term: HyperTerm, cert: Certificate) -> VerifyResult:
    """Check sum_j a_j(n) F(n+j, i) = G(n, i+1) F(n, i+1) - G(n, i) F(n, i)
    as an identity of rational functions, by exact cross-multiplication."""
    if not cert.coefficients:
        raise DomainError("certificate carries no recurrence coefficients")
    if cert.multiplier.den.is_zero():
        raise DomainError("certificate multiplier has zero denominator")
    lhs = RatFunc(BiPoly.zero())
    for j, a_j in enumerate(cert.coefficients):
        step = shift_ratio_n_steps(term, j)
        lhs = lhs + RatFunc(BiPoly.from_n_poly(a_j)) * step
    g = cert.multiplier
    g_up = RatFunc(g.num.shift_i(1), g.den.shift_i(1))
    rhs = g_up * shift_ratio(term, "i") - g
    diff = lhs - rhs
    if diff.is_zero():
        return VerifyResult(True, None)
    return VerifyResult(False, diff)


def certificate_value(term: HyperTerm, cert: Certificate, n: int, i: int) -> Rat:
    """R(n, i) = G(n, i) F(n, i) at a concrete point (multiplier pole -> error)."""
    den = cert.multiplier.den.evaluate(n, i)
    if den == 0:
        raise DomainError(f"certificate multiplier has a pole at (n={n}, i={i})")
    return cert.multiplier.num.evaluate(n, i) / den * term.value(n, i)


def telescope_residual(
    term: HyperTerm, cert: Certificate, n: int, i_lo: int, i_hi: int
) -> Rat:
    """sum_{i=i_lo}^{i_hi} sum_j a_j(n) F(n+j, i) minus R(n, i_hi+1) - R(n, i_lo).

    Zero whenever the certificate identity holds pointwise on the range (no
    multiplier poles at the evaluated boundary points or inside the range)."""
    total = Fraction(0)
    for i in range(i_lo, i_hi + 1):
        for j, a_j in enumerate(cert.coefficients):
            total += a_j.evaluate(n) * term.value(n + j, i)
    boundary = certificate_value(term, cert, n, i_hi + 1) - certificate_value(term, cert, n, i_lo)
    return total - boundary


# ---------------------------------------------------------------------------
# Order-1 Zeilberger search
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Recurrence:
    """sum_j coeffs[j](n) f(n+j) = 0, with an initial value to iterate from."""

    coeffs: tuple[ParamPoly, ...]
    initial_n: int = 0
    initial_value: Rat = Fraction(0)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1


def _normalize_pair(a0: ParamPoly, a1: ParamPoly) -> tuple[ParamPoly, ParamPoly, Fraction]:
    """Scale the pair by one rational so coefficients are a primitive integer
    pair with positive leading coefficient on a1; returns the scale used."""
    c0, c1 = a0.content(), a1.content()
    num = math.gcd(c0.numerator, c1.numerator)
    den = (c0.denominator * c1.denominator) // math.gcd(c0.denominator, c1.denominator)
    scale = Fraction(den, num) if num else Fraction(1)
    if (a1.leading() if not a1.is_zero() else a0.leading()) * scale < 0:
        scale = -scale
    return a0.scale(scale), a1.scale(scale), scale


def zeilberger_order1(
    term: HyperTerm,
    coeff_degree: int = COEFF_DEGREE_BOUND,
    gosper_degree: int = GOSPER_DEGREE_BOUND,
) -> tuple[Recurrence, Certificate] | None:
    """Search for a_0(n), a_1(n) and a certificate telescoping
    a_1 F(n+1, i) + a_0 F(n, i).  Returns None when the bounded search fails.

    The linear part a_1 u(i) + a_0 v(i) rides along inside the Gosper solve:
    with s(i) = F(n, i)/v(i) and the normal form p v/(q v+) = (a/b)(c+/c),
    a polynomial X and scalars (a_0, a_1) must satisfy
        a(i) X(i+1) - b(i-1) X(i) = c(i) (a_1 u(i) + a_0 v(i)),
    and then G = b(i-1) X(i) / (c(i) v(i)).
    """
    rho_i = shift_ratio(term, "i")
    rho_n = shift_ratio(term, "n")
    p, q = ratfunc_to_kpolys(rho_i)
    u, v = ratfunc_to_kpolys(rho_n)

    s_num = p * v
    s_den = q * v.shift(1)
    g = s_num.gcd(s_den)
    if g.degree > 0:
        s_num = s_num / g
        s_den = s_den / g
    a, b, c = gosper_normal(s_num, s_den)

    # unknowns: X_0..X_D and a0, with a1 = 1
    b1 = b.shift(-1)
    col_polys = []
    for d in range(gosper_degree + 1):
        mono = KPoly([K_ZERO] * d + [K_ONE])
        col_polys.append(a * mono.shift(1) - b1 * mono)
    col_polys.append(-(c * v))  # the a0 column
    target = c * u
    height = max([cp.degree + 1 for cp in col_polys] + [target.degree + 1])
    columns = [[cp.coeff(r) for r in range(height)] for cp in col_polys]
    rhs = [target.coeff(r) for r in range(height)]
    sol = _solve_linear(columns, rhs)
    if sol is None:
        return None
    x = KPoly(sol[: gosper_degree + 1])
    a0_k = sol[gosper_degree + 1]

    # scale (a0, a1) = (a0_k, 1) by a0's denominator, then to a primitive pair
    lam = a0_k.den
    a0_poly, a1_poly, extra = _normalize_pair(a0_k.num, lam)
    if max(a0_poly.degree, a1_poly.degree) > coeff_degree:
        return None

    g_raw = _kpoly_quotient_to_ratfunc(b1 * x, c * v)
    scale_rf = RatFunc(BiPoly.from_n_poly(lam.scale(extra)))
    g_full = g_raw * scale_rf
    cert = Certificate(coefficients=(a0_poly, a1_poly), multiplier=g_full)
    verdict = verify_certificate(term, cert)
    if not verdict.ok:
        raise RuntimeError("internal error: telescoping search result failed re-verification")
    rec = Recurrence(coeffs=(a0_poly, a1_poly))
    return rec, cert


# ---------------------------------------------------------------------------
# First-order recurrence iteration
# ---------------------------------------------------------------------------


def solve_first_order(rec: Recurrence, n_max: int) -> list[Rat]:
    """Values f(initial_n .. n_max) by exact iteration of
    coeffs[1](n) f(n+1) + coeffs[0](n) f(n) = 0."""
    if rec.order != 1:
        raise DomainError(f"expected a first-order recurrence, got order {rec.order}")
    a0, a1 = rec.coeffs
    values = [Fraction(rec.initial_value)]
    for n in range(rec.initial_n, n_max):
        lead = a1.evaluate(n)
        if lead == 0:
            raise SingularRecurrenceError(n)
        values.append(-a0.evaluate(n) * values[-1] / lead)
    return values


def matches_closed_form(values: list[Rat], initial_n: int, closed) -> bool:
    """Compare iterated values against an independently supplied evaluator."""
    return all(v == closed(initial_n + k) for k, v in enumerate(values))


def proportional_recurrences(first: tuple[ParamPoly, ...], second: tuple[ParamPoly, ...]) -> Rat | None:
    """The constant lambda with first = lambda * second, or None."""
    if len(first) != len(second):
        return None
    ratio: Fraction | None = None
    for f, s in zip(first, second):
        if f.is_zero() != s.is_zero():
            return None
        if f.is_zero():
            continue
        if f.degree != s.degree:
            return None
        r = f.leading() / s.leading()
        if f != s.scale(r):
            return None
        if ratio is None:
            ratio = r
        elif ratio != r:
            return None
    return ratio


# ---------------------------------------------------------------------------
# The printed certificate for the alternating three-binomial sum
# ---------------------------------------------------------------------------


def _npoly(*coeffs: int) -> ParamPoly:
    return ParamPoly([Fraction(c) for c in coeffs], var="n")


def alt3_recurrence() -> Recurrence:
    """-(n+1)^2 f(n+1) - 3(3n+1)(3n+2) f(n) = 0, seeded at f(0) = 1."""
    a0 = _npoly(-6, -27, -27)  # -3(3n+1)(3n+2)
    a1 = _npoly(-1, -2, -1)  # -(n+1)^2
    return Recurrence(coeffs=(a0, a1), initial_n=0, initial_value=Fraction(1))


def triplet_linear_recurrence() -> Recurrence:
    """(2n+1) n^2 f(n+1) + 3(3n-1)(2n-1)(3n+1) f(n) = 0, seeded at f(2) = 16;
    here f(n) is the alternating sum behind the linear coefficient of the
    degree-(4n-1) constant-term polynomial."""
    a0 = _npoly(3, -6, -27, 54)  # 3(3n-1)(2n-1)(3n+1)
    a1 = _npoly(0, 0, 1, 2)  # (2n+1) n^2
    return Recurrence(coeffs=(a0, a1), initial_n=2, initial_value=Fraction(16))


def alt3_certificate() -> Certificate:
    """The explicit multiplier for the alternating three-binomial sum:

        G(n, i) = i^2 (4n+1-i) Q(n, i) / (4 (n+1)(2n+1) (2n+1-i)^2 (2n+2-i)^2)

    with Q a quartic in i, paired with the recurrence coefficients
    (-3(3n+1)(3n+2), -(n+1)^2)."""
    n1 = BiPoly.affine(1, 1, 0)  # n + 1
    i = BiPoly.affine(0, 0, 1)
    q4 = n1
    q3 = n1 * BiPoly.affine(-8, -10, 0)
    q2 = n1 * (BiPoly({(0, 0): 59, (1, 0): 168, (2, 0): 120}))
    q1 = n1 * (BiPoly({(0, 0): -184, (1, 0): -790, (2, 0): -1116, (3, 0): -520}))
    q0 = n1 * (BiPoly({(0, 0): 180, (1, 0): 1036, (2, 0): 2192, (3, 0): 2024, (4, 0): 688}))
    quartic = (
        BiPoly({(0, 4): 1}) * q4
        + BiPoly({(0, 3): 1}) * q3
        + BiPoly({(0, 2): 1}) * q2
        + BiPoly({(0, 1): 1}) * q1
        + q0
    )
    num = i * i * BiPoly.affine(1, 4, -1) * quartic
    pole1 = BiPoly.affine(1, 2, -1)
    pole2 = BiPoly.affine(2, 2, -1)
    den = BiPoly.const(4) * n1 * BiPoly.affine(1, 2, 0) * pole1 * pole1 * pole2 * pole2
    a0 = _npoly(-6, -27, -27)
    a1 = _npoly(-1, -2, -1)
    return Certificate(coefficients=(a0, a1), multiplier=RatFunc(num, den))


# ---------------------------------------------------------------------------
# Certificate wire format
# ---------------------------------------------------------------------------


def _bipoly_to_json(b: BiPoly) -> list:
    return [[dn, di, rat_to_str(c)] for (dn, di), c in sorted(b.terms.items())]


def _bipoly_from_json(doc) -> BiPoly:
    return BiPoly({(int(dn), int(di)): rat_from_str(str(c)) for dn, di, c in doc})


def cert_to_json(cert: Certificate) -> dict:
    return {
        "coefficients": [[rat_to_str(c) for c in p.coeffs] for p in cert.coefficients],
        "multiplier": {
            "numerator": _bipoly_to_json(cert.multiplier.num),
            "denominator": _bipoly_to_json(cert.multiplier.den),
        },
    }


def cert_from_json(doc: dict) -> Certificate:
    try:
        coeffs = tuple(
            ParamPoly([rat_from_str(str(c)) for c in row], var="n") for row in doc["coefficients"]
        )
        num = _bipoly_from_json(doc["multiplier"]["numerator"])
        den = _bipoly_from_json(doc["multiplier"]["denominator"])
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise DomainError(f"malformed certificate document: {exc}") from exc
    return Certificate(coefficients=coeffs, multiplier=RatFunc(num, den))


def cert_loads(text: str) -> Certificate:
    return cert_from_json(json.loads(text))


def cert_dumps(cert: Certificate) -> str:
    return json.dumps(cert_to_json(cert), indent=2, sort_keys=True)
