"""Exact rational scalars and integer binomial coefficients.

Every number in this library is a ``fractions.Fraction`` (aliased ``Rat``):
arbitrary precision, always in lowest terms with a positive denominator,
normalized eagerly on every operation.  There is no floating point anywhere.

Binomial coefficients follow the falling-factorial definition
``C(n, k) = n (n-1) ... (n-k+1) / k!`` which is defined for *any* integer
top ``n`` (including negative) and natural ``k``, and is 0 whenever
``0 <= n < k``.  Terms with ``k < 0`` are treated as 0 by the callers that
sum over unrestricted ranges (support convention).
"""

from __future__ import annotations

import math
from fractions import Fraction

Rat = Fraction


def binom_int(n: int, k: int) -> Rat:
    """C(n, k) for integer n (possibly negative) and natural k, as a Rat."""
    if k < 0:
        raise ValueError(f"binomial lower index must be >= 0, got {k}")
    if n >= 0:
        return Rat(math.comb(n, k))
    prod = 1
    for s in range(k):
        prod *= n - s
    return Rat(prod, math.factorial(k))


def binom_support(n: int, k: int) -> Rat:
    """Like binom_int but 0 for k < 0 (sums over all of Z use this)."""
    if k < 0:
        return Rat(0)
    return binom_int(n, k)


def rat_to_str(x: Rat) -> str:
    """Serialize as "num/den" ("num" when the denominator is 1)."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def rat_from_str(s: str) -> Rat:
    return Fraction(s)
