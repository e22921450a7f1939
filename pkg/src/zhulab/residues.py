"""Generic iterated-residue evaluator over truncated Laurent expansions.

An expression is a product of atoms over an ordered variable list; the order
fixes the expansion region (each later variable is smaller in modulus than
each earlier one), so ``(1 - w/v)^{-n}`` with ``v`` before ``w`` expands as
``sum_r C(n+r-1, r) (w/v)^r``.  The evaluator extracts, for every variable,
the coefficient of a prescribed exponent (``-1`` for an ordinary residue),
exactly, as a polynomial in the formal parameter t.

Truncation is certified a priori, never guessed.  For each variable v the
total exponent contributed by the atoms is bounded below by

    base(v)  =  sum of explicit integer powers of v,

minus the allowance consumed by geometric atoms in which v is the outer
variable.  Working from the innermost variable outward, every series index
feeding v is therefore bounded by

    cap(v)  =  target(v) - base(v) + sum of caps of the inner variables
               coupled to v through outgoing geometric atoms,

because all other contributions to v are nonnegative.  Expanding each series
atom up to the cap of the variable it feeds is thus exhaustive for the
requested coefficient; if some cap is negative the coefficient is zero.

Half-integer exponents never reach the series machinery: ``(1+v)^{a+bt}``
coefficients are the binomial polynomials C(a+bt, r), valid for any rational
shift a.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .polynomials import DomainError, ParamPoly, binom_affine
from .scalars import Rat, binom_int, rat_from_str, rat_to_str


class ResidueInputError(DomainError):
    """Malformed expression: undeclared variables or bad atom orientation."""


class ResidueInternalError(RuntimeError):
    """Truncation-order certification failed (cannot occur on catalog input)."""


@dataclass(frozen=True)
class Power:
    """v**exponent for an integer exponent (usually negative)."""

    var: str
    exponent: int


@dataclass(frozen=True)
class OnePlusPow:
    """(1 + v)**(const + t_coeff * t) with const in (1/2)Z, t_coeff in {-1,0,1}."""

    var: str
    const: Fraction
    t_coeff: int


@dataclass(frozen=True)
class Diff:
    """(first - second)**exponent, natural exponent."""

    first: str
    second: str
    exponent: int


@dataclass(frozen=True)
class GeomInv:
    """(1 - inner/outer)**(-exponent); outer must precede inner."""

    outer: str
    inner: str
    exponent: int


Atom = Power | OnePlusPow | Diff | GeomInv


@dataclass(frozen=True)
class ResidueExpr:
    variables: tuple[str, ...]
    atoms: tuple[Atom, ...]
    residue_orders: dict[str, int] | None = None

    def targets(self) -> dict[str, int]:
        orders = self.residue_orders or {}
        return {v: orders.get(v, -1) for v in self.variables}


def _validate(expr: ResidueExpr) -> None:
    pos = {v: k for k, v in enumerate(expr.variables)}
    if len(pos) != len(expr.variables):
        raise ResidueInputError("duplicate variable in ordering")
    for atom in expr.atoms:
        if isinstance(atom, Power):
            names = (atom.var,)
        elif isinstance(atom, OnePlusPow):
            names = (atom.var,)
            if atom.t_coeff not in (-1, 0, 1):
                raise ResidueInputError(f"t coefficient must be -1, 0 or 1, got {atom.t_coeff}")
            if (2 * atom.const).denominator != 1:
                raise ResidueInputError(f"shift must lie in (1/2)Z, got {atom.const}")
        elif isinstance(atom, Diff):
            names = (atom.first, atom.second)
            if atom.exponent < 0:
                raise ResidueInputError("difference exponent must be natural")
        elif isinstance(atom, GeomInv):
            names = (atom.outer, atom.inner)
            if atom.exponent < 0:
                raise ResidueInputError("geometric exponent must be natural")
        else:  # pragma: no cover - closed union
            raise ResidueInputError(f"unknown atom {atom!r}")
        for name in names:
            if name not in pos:
                raise ResidueInputError(f"atom references undeclared variable {name!r}")
        if isinstance(atom, GeomInv) and pos[atom.outer] >= pos[atom.inner]:
            raise ResidueInputError(
                f"geometric atom requires {atom.outer!r} to precede {atom.inner!r}"
            )


def _series_caps(expr: ResidueExpr) -> dict[str, int] | None:
    """Certified per-variable caps for series indices; None if residue is 0."""
    targets = expr.targets()
    base = {v: 0 for v in expr.variables}
    for atom in expr.atoms:
        if isinstance(atom, Power):
            base[atom.var] += atom.exponent
    caps: dict[str, int] = {}
    for v in reversed(expr.variables):
        allowance = 0
        for atom in expr.atoms:
            if isinstance(atom, GeomInv) and atom.outer == v:
                if atom.inner not in caps:
                    raise ResidueInternalError(
                        "cap chain visited an outer variable before its inner partner"
                    )
                allowance += caps[atom.inner]
        caps[v] = targets[v] - base[v] + allowance
        if caps[v] < 0:
            return None
    return caps


def _expand_atom(atom: Atom, caps: dict[str, int], index: dict[str, int]):
    """Sparse truncated expansion: dict exponent-vector -> ParamPoly coeff."""
    nvars = len(index)

    def vec(**exps: int) -> tuple[int, ...]:
        out = [0] * nvars
        for name, e in exps.items():
            out[index[name]] = e
        return tuple(out)

    one = ParamPoly.const(1, "t")
    if isinstance(atom, Power):
        return {vec(**{atom.var: atom.exponent}): one}
    if isinstance(atom, OnePlusPow):
        return {
            vec(**{atom.var: r}): binom_affine(atom.const, atom.t_coeff, r)
            for r in range(caps[atom.var] + 1)
        }
    if isinstance(atom, Diff):
        out = {}
        for r in range(atom.exponent + 1):
            c = binom_int(atom.exponent, r) * (-1 if r % 2 else 1)
            out[vec(**{atom.first: atom.exponent - r, atom.second: r})] = one.scale(c)
        return out
    if isinstance(atom, GeomInv):
        out = {}
        for r in range(caps[atom.inner] + 1):
            c = binom_int(atom.exponent + r - 1, r)
            out[vec(**{atom.outer: -r, atom.inner: r})] = one.scale(c)
        return out
    raise ResidueInputError(f"unknown atom {atom!r}")  # pragma: no cover


def eval_residue(expr: ResidueExpr) -> ParamPoly:
    """Exact iterated residue of the expression, as a polynomial in t."""
    _validate(expr)
    caps = _series_caps(expr)
    if caps is None:
        return ParamPoly.zero("t")
    index = {v: k for k, v in enumerate(expr.variables)}
    targets = expr.targets()
    target_vec = tuple(targets[v] for v in expr.variables)

    expansions = [_expand_atom(atom, caps, index) for atom in expr.atoms]
    # Multiply small/rigid atoms first so pruning bites early.
    expansions.sort(key=len)

    # Per-remaining-step min/max contribution per variable, for pruning.
    mins = [None] * (len(expansions) + 1)
    maxs = [None] * (len(expansions) + 1)
    mins[-1] = (0,) * len(expr.variables)
    maxs[-1] = (0,) * len(expr.variables)
    for k in range(len(expansions) - 1, -1, -1):
        lo = [min(v[d] for v in expansions[k]) for d in range(len(expr.variables))]
        hi = [max(v[d] for v in expansions[k]) for d in range(len(expr.variables))]
        mins[k] = tuple(a + b for a, b in zip(lo, mins[k + 1]))
        maxs[k] = tuple(a + b for a, b in zip(hi, maxs[k + 1]))

    acc: dict[tuple[int, ...], ParamPoly] = {(0,) * len(expr.variables): ParamPoly.const(1, "t")}
    for k, expansion in enumerate(expansions):
        lo, hi = mins[k + 1], maxs[k + 1]
        nxt: dict[tuple[int, ...], ParamPoly] = {}
        for e1, c1 in acc.items():
            for e2, c2 in expansion.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if any(
                    e[d] + lo[d] > target_vec[d] or e[d] + hi[d] < target_vec[d]
                    for d in range(len(e))
                ):
                    continue
                prod = c1 * c2
                if e in nxt:
                    nxt[e] = nxt[e] + prod
                else:
                    nxt[e] = prod
        acc = nxt
        if not acc:
            return ParamPoly.zero("t")
    return acc.get(target_vec, ParamPoly.zero("t"))


# ---------------------------------------------------------------------------
# Integrand catalog: the residue expressions behind the direct triple sums
# ---------------------------------------------------------------------------


def triplet_integrand(p: int) -> ResidueExpr:
    """Integrand whose iterated residue is the triplet constant-term polynomial."""
    half = Fraction(0)
    return ResidueExpr(
        variables=("x1", "x2", "x3"),
        atoms=(
            Power("x1", -2 * p - 2),
            Power("x2", -2 * p),
            Power("x3", -2 * p),
            GeomInv("x1", "x2", 2 * p),
            GeomInv("x1", "x3", 2 * p),
            Diff("x2", "x3", 2 * p),
            OnePlusPow("x1", Fraction(2 * p - 1), -1),
            OnePlusPow("x2", half, 1),
            OnePlusPow("x3", half, 1),
        ),
    )


def super_integrand(m: int) -> ResidueExpr:
    """Compact-form integrand for the super family."""
    return ResidueExpr(
        variables=("z1", "z2", "z3"),
        atoms=(
            Power("z1", -2 * m - 2),
            Power("z2", -2 * m - 1),
            Power("z3", -2 * m - 1),
            GeomInv("z1", "z2", 2 * m + 1),
            GeomInv("z1", "z3", 2 * m + 1),
            Diff("z2", "z3", 2 * m),
            OnePlusPow("z1", Fraction(2 * m), -1),
            OnePlusPow("z2", Fraction(0), 1),
            OnePlusPow("z3", Fraction(0), 1),
        ),
    )


def super_theorem_sum(m: int) -> ParamPoly:
    """The super family as literally stated: a sum of 2m+1 residues with
    z2^{-i-1} z3^i weights and a (2m+1)-power difference factor."""
    total = ParamPoly.zero("t")
    for i in range(2 * m + 1):
        expr = ResidueExpr(
            variables=("z1", "z2", "z3"),
            atoms=(
                Power("z1", -2 * m - 2),
                Power("z2", -2 * m - 1 - i - 1),
                Power("z3", -2 * m - 1 + i),
                GeomInv("z1", "z2", 2 * m + 1),
                GeomInv("z1", "z3", 2 * m + 1),
                Diff("z2", "z3", 2 * m + 1),
                OnePlusPow("z1", Fraction(2 * m), -1),
                OnePlusPow("z2", Fraction(0), 1),
                OnePlusPow("z3", Fraction(0), 1),
            ),
        )
        total = total + eval_residue(expr)
    return total


def twisted_main_integrand(m: int) -> ResidueExpr:
    """Integrand for the twisted constant-term identity (1/z1^3 weight)."""
    half = Fraction(1, 2)
    return ResidueExpr(
        variables=("z1", "z2", "z3"),
        atoms=(
            Power("z1", -2 * m - 4),
            Power("z2", -2 * m - 1),
            Power("z3", -2 * m - 1),
            GeomInv("z1", "z2", 2 * m + 1),
            GeomInv("z1", "z3", 2 * m + 1),
            Diff("z2", "z3", 2 * m),
            OnePlusPow("z1", 2 * m + half, -1),
            OnePlusPow("z2", half, 1),
            OnePlusPow("z3", -half, 1),
        ),
    )


def twisted_pair_integrands(m: int) -> tuple[ResidueExpr, ResidueExpr]:
    """The two twisted residues (1/z1^2 weight; and the shifted-power variant),
    with every undetermined prefactor set to 1."""
    half = Fraction(1, 2)
    first = ResidueExpr(
        variables=("z1", "z2", "z3"),
        atoms=(
            Power("z1", -2 * m - 3),
            Power("z2", -2 * m - 1),
            Power("z3", -2 * m - 1),
            GeomInv("z1", "z2", 2 * m + 1),
            GeomInv("z1", "z3", 2 * m + 1),
            Diff("z2", "z3", 2 * m),
            OnePlusPow("z1", 2 * m + half, -1),
            OnePlusPow("z2", half, 1),
            OnePlusPow("z3", -half, 1),
        ),
    )
    second = ResidueExpr(
        variables=("z1", "z2", "z3"),
        atoms=(
            Power("z1", -2 * m - 3),
            Power("z2", -2 * m - 2),
            Power("z3", -2 * m - 2),
            GeomInv("z1", "z2", 2 * m + 1),
            GeomInv("z1", "z3", 2 * m + 1),
            Diff("z2", "z3", 2 * m + 2),
            OnePlusPow("z1", 2 * m + half, -1),
            OnePlusPow("z2", -half, 1),
            OnePlusPow("z3", -half, 1),
        ),
    )
    return first, second


def twisted_residue_pair(m: int) -> tuple[ParamPoly, ParamPoly]:
    """Evaluate both twisted residues with unit normalization."""
    if m < 1:
        raise ResidueInputError(f"twisted parameter must be >= 1, got {m}")
    first, second = twisted_pair_integrands(m)
    return eval_residue(first), eval_residue(second)


# ---------------------------------------------------------------------------
# JSON wire format
# ---------------------------------------------------------------------------


def _exp_to_json(const: Fraction | int, t_coeff: int) -> dict:
    return {"const": rat_to_str(Fraction(const)), "t_coeff": int(t_coeff)}


def expr_to_json(expr: ResidueExpr) -> dict:
    atoms = []
    for atom in expr.atoms:
        if isinstance(atom, Power):
            atoms.append({"kind": "power", "var": atom.var, "exponent": _exp_to_json(atom.exponent, 0)})
        elif isinstance(atom, OnePlusPow):
            atoms.append(
                {"kind": "one_plus_pow", "var": atom.var, "exponent": _exp_to_json(atom.const, atom.t_coeff)}
            )
        elif isinstance(atom, Diff):
            atoms.append(
                {"kind": "diff", "vars": [atom.first, atom.second], "exponent": _exp_to_json(atom.exponent, 0)}
            )
        else:
            atoms.append(
                {"kind": "geom_inv", "vars": [atom.outer, atom.inner], "exponent": _exp_to_json(atom.exponent, 0)}
            )
    return {
        "variables": list(expr.variables),
        "atoms": atoms,
        "residue_orders": dict(expr.targets()),
    }


def expr_from_json(doc: dict) -> ResidueExpr:
    try:
        variables = tuple(str(v) for v in doc["variables"])
        atoms: list[Atom] = []
        for a in doc["atoms"]:
            kind = a["kind"]
            const = rat_from_str(str(a["exponent"]["const"]))
            t_coeff = int(a["exponent"].get("t_coeff", 0))
            if kind == "power":
                if const.denominator != 1 or t_coeff != 0:
                    raise ResidueInputError("power exponent must be a plain integer")
                atoms.append(Power(a["var"], int(const)))
            elif kind == "one_plus_pow":
                atoms.append(OnePlusPow(a["var"], const, t_coeff))
            elif kind == "diff":
                atoms.append(Diff(a["vars"][0], a["vars"][1], int(const)))
            elif kind == "geom_inv":
                atoms.append(GeomInv(a["vars"][0], a["vars"][1], int(const)))
            else:
                raise ResidueInputError(f"unknown atom kind {kind!r}")
        orders = {str(k): int(v) for k, v in doc.get("residue_orders", {}).items()}
    except (KeyError, IndexError, TypeError, ValueError) as exc:
        raise ResidueInputError(f"malformed residue expression document: {exc}") from exc
    return ResidueExpr(variables=variables, atoms=tuple(atoms), residue_orders=orders)


def expr_loads(text: str) -> ResidueExpr:
    return expr_from_json(json.loads(text))


def expr_dumps(expr: ResidueExpr) -> str:
    return json.dumps(expr_to_json(expr), indent=2, sort_keys=True)
