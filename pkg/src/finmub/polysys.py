"""Defining polynomial systems for ``n`` bases beyond B0 in dimension ``d``.

Each entry of basis ``b`` at (row, col) is written ``x + iota*y`` with
``iota**2 = c``; conjugation sends ``(x, y)`` to ``(x, -y)``.  Three families:

* type I: ``d*(x**2 - c*y**2) - 1`` for every entry (norm ``1/d``);
* type II: real and imaginary parts of ``<col_b, col_a>`` for ``a < b``;
* type III: ``d**2 * (R**2 - c*J**2) - d`` where ``R + iota*J`` is the inner
  product of a column of one basis with a column of another.

Denominators are cleared so every coefficient is an integer.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from .gf import FieldCtx, FieldError, frobenius
from .hermitian import MubSet

__all__ = [
    "Poly",
    "PolySystem",
    "generate_system",
    "evaluate_system",
    "nonresidue",
    "mubset_assignment",
]

Monomial = tuple[tuple[int, int], ...]  # sorted (variable, exponent) pairs
Poly = dict  # Monomial -> int

HEADER = "type I scaled by d, type III scaled by d^2; variables ordered (basis, col, row, part)"


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    acc: dict[int, int] = dict(a)
    for v, e in b:
        acc[v] = acc.get(v, 0) + e
    return tuple(sorted(acc.items()))


def _mul(p: Poly, q: Poly) -> Poly:
    out: Poly = {}
    for ma, ca in p.items():
        for mb, cb in q.items():
            m = _mono_mul(ma, mb)
            out[m] = out.get(m, 0) + ca * cb
    return {m: c for m, c in out.items() if c}


def _add(*polys: Poly, scales=None) -> Poly:
    out: Poly = {}
    for k, p in enumerate(polys):
        s = 1 if scales is None else scales[k]
        for m, c in p.items():
            out[m] = out.get(m, 0) + s * c
    return {m: c for m, c in out.items() if c}


def _var(v: int) -> Poly:
    return {((v, 1),): 1}


def _const(c: int) -> Poly:
    return {(): c} if c else {}


@dataclass
class PolySystem:
    d: int
    n: int
    c: int
    variables: list[str]
    polys: list[tuple[str, Poly]]  # (type tag, polynomial)

    def var_index(self, b: int, col: int, row: int, part: int) -> int:
        """Position of the variable for basis ``b`` (1-based), entry (row, col)."""
        d = self.d
        return (((b - 1) * d + col) * d + row) * 2 + part

    def counts(self) -> dict[str, int]:
        out = {"I": 0, "II": 0, "III": 0}
        for t, _ in self.polys:
            out[t] += 1
        return out

    def degree(self, k: int) -> int:
        return max((sum(e for _, e in m) for m in self.polys[k][1]), default=0)

    def to_json(self) -> dict:
        return {
            "header": HEADER,
            "d": self.d,
            "n": self.n,
            "c": self.c,
            "vars": list(self.variables),
            "polys": [
                {
                    "type": t,
                    "terms": [[c, [[self.variables[v], e] for v, e in m]] for m, c in sorted(p.items())],
                }
                for t, p in self.polys
            ],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    def to_text(self) -> str:
        """One polynomial per line in monomial notation."""
        lines = [f"# {HEADER}"]
        for t, p in self.polys:
            lines.append(f"{t}: {_format(p, self.variables)}")
        return "\n".join(lines) + "\n"


def _format(p: Poly, names: list[str]) -> str:
    terms = []
    for m, c in sorted(p.items(), key=lambda kv: (-sum(e for _, e in kv[0]), kv[0])):
        mono = "*".join(names[v] if e == 1 else f"{names[v]}^{e}" for v, e in m)
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        terms.append(("- " if c < 0 else "+ ") + body)
    if not terms:
        return "0"
    s = " ".join(terms)
    return s[2:] if s.startswith("+ ") else "-" + s[1:]


def generate_system(d: int, n: int, c: int = -1) -> PolySystem:
    """The unreduced system for ``n`` bases beyond B0 in dimension ``d``."""
    if d < 2 or n < 1:
        raise ValueError("need d >= 2 and n >= 1")
    names = [
        f"b{b}c{col}r{row}{part}"
        for b in range(1, n + 1)
        for col in range(d)
        for row in range(d)
        for part in ("re", "im")
    ]
    sysm = PolySystem(d=d, n=n, c=c, variables=names, polys=[])
    X = lambda b, col, row: _var(sysm.var_index(b, col, row, 0))  # noqa: E731
    Y = lambda b, col, row: _var(sysm.var_index(b, col, row, 1))  # noqa: E731

    def inner(b1, a, b2, k):
        """Real and imaginary parts of sum_j conj(z_{j,a}) w_{j,k}."""
        re, im = {}, {}
        for j in range(d):
            x, y, u, v = X(b1, a, j), Y(b1, a, j), X(b2, k, j), Y(b2, k, j)
            re = _add(re, _mul(x, u), _mul(y, v), scales=[1, 1, -c])
            im = _add(im, _mul(x, v), _mul(y, u), scales=[1, 1, -1])
        return re, im

    for b in range(1, n + 1):
        for col in range(d):
            for row in range(d):
                x, y = X(b, col, row), Y(b, col, row)
                sysm.polys.append(("I", _add(_mul(x, x), _mul(y, y), _const(-1), scales=[d, -c * d, 1])))
    for b in range(1, n + 1):
        for a, k in combinations(range(d), 2):
            re, im = inner(b, k, b, a)
            sysm.polys.append(("II", re))
            sysm.polys.append(("II", im))
    for b1, b2 in combinations(range(1, n + 1), 2):
        for a in range(d):
            for k in range(d):
                re, im = inner(b1, a, b2, k)
                sysm.polys.append(("III", _add(_mul(re, re), _mul(im, im), _const(-d), scales=[d * d, -c * d * d, 1])))
    return sysm


def evaluate_system(sysm: PolySystem, assignment, ctx: FieldCtx | None = None) -> list:
    """Residuals of every polynomial at ``assignment``.

    ``assignment`` is a mapping from variable names (or indices) to values or
    a sequence in variable order.  With ``ctx`` the values are F_q elements
    and arithmetic happens in the field; otherwise it is exact over Q.
    """
    nv = len(sysm.variables)
    if isinstance(assignment, dict):
        vals = [None] * nv
        for key, val in assignment.items():
            idx = sysm.variables.index(key) if isinstance(key, str) else int(key)
            vals[idx] = val
    else:
        vals = list(assignment)
        if len(vals) != nv:
            raise ValueError(f"expected {nv} values, got {len(vals)}")
    missing = [sysm.variables[i] for i, v in enumerate(vals) if v is None]
    if missing:
        raise ValueError(f"missing variables: {missing[:5]}{'...' if len(missing) > 5 else ''}")
    out = []
    if ctx is None:
        vals = [Fraction(v) for v in vals]
        for _, p in sysm.polys:
            acc = Fraction(0)
            for m, coef in p.items():
                term = Fraction(coef)
                for v, e in m:
                    term *= vals[v] ** e
                acc += term
            out.append(acc)
        return out
    vals = [int(v) for v in vals]
    for _, p in sysm.polys:
        acc = 0
        for m, coef in p.items():
            term = ctx.from_int(coef)
            for v, e in m:
                term = ctx.mul(term, ctx.pow(vals[v], e))
            acc = ctx.add(acc, term)
        out.append(int(acc))
    return out


def nonresidue(ctx: FieldCtx) -> int:
    """The smallest integer that is a non-square in F_q.

    Coefficients of a system are integers, so only prime-field values of
    ``c`` are usable; none exists when ``r`` is even.
    """
    if ctx.p == 2:
        raise FieldError("characteristic 2 has no quadratic non-residues")
    for x in range(1, ctx.p):
        if int(ctx.log[x]) % (2 * (ctx.q + 1)):
            return x
    raise FieldError(f"every element of F_{ctx.p} is a square in F_{ctx.q}")


def mubset_assignment(mubs: MubSet, c: int | None = None) -> tuple[list[int], int]:
    """Coordinates ``(x, y)`` of every entry relative to ``iota = sqrt(c)``.

    Returns ``(values in variable order, c)``; ``c`` defaults to
    :func:`nonresidue`.
    """
    ctx, d = mubs.ctx, mubs.d
    if c is None:
        c = nonresidue(ctx)
    iota = ctx.sqrt(ctx.from_int(c))
    if iota is None or ctx.in_base(iota):
        raise FieldError(f"{c} must be a non-residue of F_q")
    half = ctx.inv(ctx.from_int(2))
    inv_2iota = ctx.inv(ctx.mul(2, iota))
    vals = []
    for B in mubs.bases:
        B = np.asarray(B)
        for col in range(d):
            for row in range(d):
                z = int(B[row, col])
                zq = int(frobenius(ctx, z))
                vals.append(int(ctx.mul(ctx.add(z, zq), half)))
                vals.append(int(ctx.mul(ctx.sub(z, zq), inv_2iota)))
    return vals, c
