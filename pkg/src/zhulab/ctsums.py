"""Constant-term polynomials via their explicit finite triple sums.

Each family of iterated residues collapses, after expanding every factor of
the integrand, to a finite sum of products of binomial coefficients in which
the free parameter t survives inside ``C(t + shift, k)`` factors.  This
module evaluates those sums directly and exactly, together with the closed
forms they are expected to equal.  The independent series-expansion route
lives in :mod:`zhulab.residues`; the two must agree coefficient by
coefficient (cross-route invariant).

Sign convention: expanding ``(u - v)^N`` and ``(1 - v/u)^{-M}`` produces an
alternating factor ``(-1)^{i+j+k}`` on the three summation indices.  The
triplet-family sum carries that factor like its siblings (dropping it breaks
the closed-form identity already at the smallest parameter).
"""

from __future__ import annotations

import math
from fractions import Fraction

from .polynomials import DomainError, ParamPoly, binom_affine
from .scalars import Rat, binom_int


class ParameterError(DomainError):
    """Parameter outside the documented validity range (and not diagnostic)."""


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ParameterError(msg)


# ---------------------------------------------------------------------------
# Triplet family: degree-(4p-1) polynomial with p >= 2
# ---------------------------------------------------------------------------


def triplet_triple_sum(p: int, diagnostic: bool = False) -> ParamPoly:
    """The triplet constant-term polynomial, by direct triple summation.

    Sum over i in 1..2p-1, j in 0..2p-1-i, k in 0..i-1 of
    (-1)^{i+j+k} C(2p,i) C(-2p,j) C(-2p,k) C(t,2p-1-i-j) C(t,i-1-k)
    C(2p-1-t, 2p+j+k+1).
    """
    _require(p >= 2 or diagnostic, f"triplet parameter must be >= 2, got {p}")
    total = ParamPoly.zero("t")
    for i in range(1, 2 * p):
        ci = binom_int(2 * p, i)
        for j in range(0, 2 * p - i):
            cj = binom_int(-2 * p, j)
            left = binom_affine(0, 1, 2 * p - 1 - i - j)
            for k in range(0, i):
                sign = -1 if (i + j + k) % 2 else 1
                c = ci * cj * binom_int(-2 * p, k) * sign
                term = left * binom_affine(0, 1, i - 1 - k)
                term = term * binom_affine(2 * p - 1, -1, 2 * p + j + k + 1)
                total = total + term.scale(c)
    return total


def triplet_closed_form(p: int) -> ParamPoly:
    """C(2p,p) * C(2p-2,p-1) * C(t+p, 4p-1)."""
    c = binom_int(2 * p, p) * binom_int(2 * p - 2, p - 1)
    return binom_affine(p, 1, 4 * p - 1).scale(c)


# ---------------------------------------------------------------------------
# Super family: degree-(4m+1) polynomial with m >= 1 (m = 0 is a diagnostic)
# ---------------------------------------------------------------------------


def super_triple_sum(m: int, diagnostic: bool = False) -> ParamPoly:
    """The super-family constant-term polynomial, by direct triple summation.

    Sum over i in 0..2m, j in 0..2m-i, k in 0..i of
    (-1)^{i+j+k} C(-2m-1,k) C(-2m-1,j) C(2m,i) C(t,i-k) C(t,2m-j-i)
    C(2m-t, 2m+1+k+j).
    """
    _require(m >= 1 or diagnostic, f"super parameter must be >= 1, got {m}")
    total = ParamPoly.zero("t")
    for i in range(0, 2 * m + 1):
        ci = binom_int(2 * m, i)
        for j in range(0, 2 * m - i + 1):
            cj = binom_int(-2 * m - 1, j)
            left = binom_affine(0, 1, 2 * m - j - i)
            for k in range(0, i + 1):
                sign = -1 if (i + j + k) % 2 else 1
                c = ci * cj * binom_int(-2 * m - 1, k) * sign
                term = left * binom_affine(0, 1, i - k)
                term = term * binom_affine(2 * m, -1, 2 * m + 1 + k + j)
                total = total + term.scale(c)
    return total


def super_closed_form(m: int) -> ParamPoly:
    """-C(2m,m)^2 * C(t+m, 4m+1)."""
    c = -(binom_int(2 * m, m) ** 2)
    return binom_affine(m, 1, 4 * m + 1).scale(c)


# ---------------------------------------------------------------------------
# Twisted family: half-integer shifts, degree 4m+3 sum with an affine factor
# ---------------------------------------------------------------------------


def twisted_triple_sum(m: int) -> ParamPoly:
    """The twisted constant-term polynomial, by direct triple summation.

    Sum over i in 0..2m, j in 0..2m-i, k in 0..i of
    (-1)^{i+j+k} C(2m+1/2-t, 2m+3+j+k) C(-2m-1,j) C(-2m-1,k) C(2m,i)
    C(t+1/2, i-k) C(t-1/2, 2m-j-i).
    """
    _require(m >= 1, f"twisted parameter must be >= 1, got {m}")
    half = Fraction(1, 2)
    total = ParamPoly.zero("t")
    for i in range(0, 2 * m + 1):
        ci = binom_int(2 * m, i)
        for j in range(0, 2 * m - i + 1):
            cj = binom_int(-2 * m - 1, j)
            left = binom_affine(-half, 1, 2 * m - j - i)
            for k in range(0, i + 1):
                sign = -1 if (i + j + k) % 2 else 1
                c = ci * cj * binom_int(-2 * m - 1, k) * sign
                term = binom_affine(2 * m + half, -1, 2 * m + 3 + j + k)
                term = term * binom_affine(half, 1, i - k) * left
                total = total + term.scale(c)
    return total


def twisted_closed_form(m: int) -> ParamPoly:
    """(t-m) C(t+1/2+m, 4m+2) C(2m,m) C(2m+1,m) / ((4m+3)(2m-1))."""
    c = binom_int(2 * m, m) * binom_int(2 * m + 1, m)
    c = c / ((4 * m + 3) * (2 * m - 1))
    lin = ParamPoly((Fraction(-m), Fraction(1)), "t")
    return (lin * binom_affine(Fraction(2 * m + 1, 2), 1, 4 * m + 2)).scale(c)


def twisted_pair_closed_form(m: int) -> ParamPoly:
    """-C(2m,m)^2 (2m+1)/(m+1) * C(t+m+1/2, 4m+2)  (the nonzero pair member)."""
    c = -(binom_int(2 * m, m) ** 2) * Fraction(2 * m + 1, m + 1)
    return binom_affine(Fraction(2 * m + 1, 2), 1, 4 * m + 2).scale(c)


# ---------------------------------------------------------------------------
# One-parameter generalization of the linear-coefficient sum
# ---------------------------------------------------------------------------


def k_shifted_sum(p: int, k: int) -> Rat:
    """Sum over i in k..2p-k of (-1)^i C(2p,i) C(-2p,2p-k-i) C(-2p,i-k)."""
    _require(p >= 2, f"parameter must be >= 2, got {p}")
    _require(1 <= k <= p, f"shift must satisfy 1 <= k <= p, got {k}")
    total = Fraction(0)
    for i in range(k, 2 * p - k + 1):
        sign = -1 if i % 2 else 1
        total += sign * binom_int(2 * p, i) * binom_int(-2 * p, 2 * p - k - i) * binom_int(-2 * p, i - k)
    return total


def k_shifted_closed_form(p: int, k: int) -> Rat:
    """2 (-1)^p (3p-1-k)! / ((2p-k) (p-1)!^2 (p-k)!)."""
    sign = -1 if p % 2 else 1
    num = 2 * sign * math.factorial(3 * p - 1 - k)
    den = (2 * p - k) * math.factorial(p - 1) ** 2 * math.factorial(p - k)
    return Fraction(num, den)
