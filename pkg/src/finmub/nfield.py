"""Exact arithmetic in Q(i, sqrt6, sqrt3) and the hyperbolic d=6 example.

Elements are eight rational coordinates over the monomials
``i**a * sqrt6**b * sqrt3**c`` stored at position ``a + 2b + 4c``, i.e. the
basis {1, i, sqrt6, i sqrt6} tensored with {1, sqrt3}.  The involution
``sigma`` negates sqrt3 and fixes ``K = Q(i, sqrt6)``; the Hermitian form is
``<x, y> = sum sigma(x_j) y_j``.  Because ``i`` is fixed, the form is
hyperbolic rather than positive definite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from .gf import FieldCtx, FieldError, build_field, frobenius, prime_power
from .hermitian import MubSet, VerificationReport, Violation

__all__ = [
    "NfElem",
    "ONE",
    "I",
    "SQRT3",
    "SQRT6",
    "OMEGA",
    "nf_norm",
    "nf_inner",
    "quiver_set",
    "verify_quiver_char0",
    "Reducer",
    "reduce_mod",
    "nf_matrix_to_json",
    "nf_matrix_from_json",
]

_SQUARES = (-1, 6, 3)  # i**2, sqrt6**2, sqrt3**2


def _mono_mul(s: int, t: int) -> tuple[int, int]:
    """Product of monomials ``s`` and ``t`` as ``(scale, monomial)``."""
    scale = 1
    for bit, sq in enumerate(_SQUARES):
        if (s >> bit) & 1 and (t >> bit) & 1:
            scale *= sq
    return scale, s ^ t


_MUL = [[_mono_mul(s, t) for t in range(8)] for s in range(8)]


@dataclass(frozen=True)
class NfElem:
    """An element of Q(i, sqrt6, sqrt3) with exact rational coordinates."""

    c: tuple[Fraction, ...]

    def __post_init__(self):
        c = tuple(Fraction(x) for x in self.c)
        if len(c) != 8:
            raise ValueError("an element needs 8 coordinates")
        object.__setattr__(self, "c", c)

    @classmethod
    def rational(cls, x) -> NfElem:
        return cls((Fraction(x),) + (Fraction(0),) * 7)

    @staticmethod
    def _lift(x) -> NfElem:
        return x if isinstance(x, NfElem) else NfElem.rational(x)

    def __add__(self, other) -> NfElem:
        other = self._lift(other)
        return NfElem(tuple(a + b for a, b in zip(self.c, other.c)))

    __radd__ = __add__

    def __neg__(self) -> NfElem:
        return NfElem(tuple(-a for a in self.c))

    def __sub__(self, other) -> NfElem:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> NfElem:
        return self._lift(other) - self

    def __mul__(self, other) -> NfElem:
        other = self._lift(other)
        out = [Fraction(0)] * 8
        for s, a in enumerate(self.c):
            if not a:
                continue
            for t, b in enumerate(other.c):
                if b:
                    scale, m = _MUL[s][t]
                    out[m] += scale * a * b
        return NfElem(tuple(out))

    __rmul__ = __mul__

    def __truediv__(self, other) -> NfElem:
        return self * self._lift(other).inverse()

    def __pow__(self, e: int) -> NfElem:
        if e < 0:
            return self.inverse() ** (-e)
        out, base = ONE, self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __bool__(self) -> bool:
        return any(self.c)

    def inverse(self) -> NfElem:
        """Solve ``self * y = 1`` by exact Gaussian elimination."""
        A = [[Fraction(0)] * 8 for _ in range(8)]
        for t in range(8):
            col = (self * NfElem.basis(t)).c
            for r in range(8):
                A[r][t] = col[r]
        rhs = [Fraction(1)] + [Fraction(0)] * 7
        for k in range(8):
            piv = next((r for r in range(k, 8) if A[r][k]), None)
            if piv is None:
                raise ZeroDivisionError("element is not invertible")
            A[k], A[piv] = A[piv], A[k]
            rhs[k], rhs[piv] = rhs[piv], rhs[k]
            for r in range(8):
                if r != k and A[r][k]:
                    f = A[r][k] / A[k][k]
                    A[r] = [x - f * y for x, y in zip(A[r], A[k])]
                    rhs[r] -= f * rhs[k]
        return NfElem(tuple(rhs[k] / A[k][k] for k in range(8)))

    @classmethod
    def basis(cls, m: int) -> NfElem:
        c = [Fraction(0)] * 8
        c[m] = Fraction(1)
        return cls(tuple(c))

    def sigma(self) -> NfElem:
        """``sqrt3 -> -sqrt3``; fixes ``K = Q(i, sqrt6)``."""
        return NfElem(tuple(-a if m & 4 else a for m, a in enumerate(self.c)))

    def in_K(self) -> bool:
        return not any(self.c[4:])

    def to_json(self) -> list[str]:
        return [f"{a.numerator}/{a.denominator}" for a in self.c]

    @classmethod
    def from_json(cls, obj) -> NfElem:
        return cls(tuple(Fraction(s) for s in obj))

    def __repr__(self) -> str:
        names = ["", "i", "s6", "i*s6", "s3", "i*s3", "s6*s3", "i*s6*s3"]
        terms = [f"{a}{'*' + names[m] if names[m] else ''}" for m, a in enumerate(self.c) if a]
        return "NfElem(" + (" + ".join(terms) or "0") + ")"


ONE = NfElem.basis(0)
I = NfElem.basis(1)  # noqa: E741
SQRT6 = NfElem.basis(2)
SQRT3 = NfElem.basis(4)
OMEGA = (I * SQRT3 - 1) * Fraction(1, 2)
INV_SQRT6 = SQRT6 * Fraction(1, 6)


def nf_norm(x: NfElem) -> NfElem:
    """``x * sigma(x)``, the norm down to ``K``."""
    return x * x.sigma()


def nf_inner(x, y) -> NfElem:
    """``sum_j sigma(x_j) * y_j``."""
    if len(x) != len(y):
        raise ValueError("dimension mismatch")
    out = NfElem.rational(0)
    for a, b in zip(x, y):
        out = out + a.sigma() * b
    return out


def _matrix(rows) -> list[list[NfElem]]:
    return [[INV_SQRT6 * NfElem._lift(x) for x in row] for row in rows]


def quiver_set():
    """The two bases and four extra vectors in dimension 6, as columns.

    Returns ``(B1, B2, V)`` as nested lists of :class:`NfElem` with shapes
    6x6, 6x6 and 6x4, every entry already divided by sqrt6.
    """
    s, w = SQRT3, OMEGA
    w2 = w * w
    a, b = s - 2, -s - 2  # -2 + sqrt3, -2 - sqrt3
    B1 = _matrix(
        [
            [1, 1, 1, 1, 1, 1],
            [1, a, -1, -a, a, -a],
            [1, 1, b, 1, 1, a],
            [1, b, -b, -1, 1, -1],
            [1, 1, b, a, 1, 1],
            [1, 1, -b, -1, b, -1],
        ]
    )
    B2 = _matrix(
        [
            [1, 1, 1, 1, 1, 1],
            [1, 1, -1, a, -1, -a],
            [1, 1, 1, 1, b, a],
            [1, b, -b, b, -b, -1],
            [1, 1, b, 1, 1, a],
            [b, 1, -b, b, -b, -1],
        ]
    )
    t = 2 - s
    V = _matrix(
        [
            [1, 1, 1, 1],
            [w2 * t, -w2 * t, -w * t, w * t],
            [w, w, w2, w2],
            [-w, w, w2, -w2],
            [w2, w2, w, w],
            [-1, 1, 1, -1],
        ]
    )
    return B1, B2, V


def _columns(M) -> list[list[NfElem]]:
    return [[row[j] for row in M] for j in range(len(M[0]))]


def verify_quiver_char0() -> VerificationReport:
    """Exact check of :func:`quiver_set` under the sigma-Hermitian form."""
    B1, B2, V = quiver_set()
    d = 6
    one, zero, sixth = ONE, NfElem.rational(0), NfElem.rational(Fraction(1, 6))
    eye = [[one if r == c else zero for c in range(d)] for r in range(d)]
    bases = [_columns(eye), _columns(B1), _columns(B2)]
    extras = _columns(V)
    checks: dict[str, list[int]] = {}
    violations: list[Violation] = []

    def tally(name, ok, left, right, value):
        stat = checks.setdefault(name, [0, 0])
        stat[1] += 1
        if ok:
            stat[0] += 1
        else:
            violations.append(Violation(name, left, right, repr(value), repr(nf_norm(value))))

    for bi in (1, 2):
        B = bases[bi]
        for j, col in enumerate(B):
            for r, x in enumerate(col):
                tally("entry_norm", nf_norm(x) == sixth, (bi, j), (0, r), x)
        for j, col in enumerate(B):
            g = nf_inner(col, col)
            tally("unit", g == one, (bi, j), (bi, j), g)
        for j, k in combinations(range(d), 2):
            g = nf_inner(B[j], B[k])
            tally("orthogonal", g == zero, (bi, j), (bi, k), g)
    for i, j in combinations(range(3), 2):
        for a, x in enumerate(bases[i]):
            for b, y in enumerate(bases[j]):
                g = nf_inner(x, y)
                tally("mutually_unbiased", nf_norm(g) == sixth, (i, a), (j, b), g)
    for a, x in enumerate(extras):
        g = nf_inner(x, x)
        tally("extras_unit", g == one, (3, a), (3, a), g)
    for a, b in combinations(range(len(extras)), 2):
        g = nf_inner(extras[a], extras[b])
        tally("extras_orthogonal", g == zero, (3, a), (3, b), g)
    for i, B in enumerate(bases):
        for a, x in enumerate(B):
            for b, y in enumerate(extras):
                g = nf_inner(x, y)
                tally("extras_mutually_unbiased", nf_norm(g) == sixth, (i, a), (3, b), g)
    return VerificationReport(
        passed=not violations,
        n_bases=3,
        n_extras=len(extras),
        checks={k: (v[0], v[1]) for k, v in checks.items()},
        violations=violations,
    )


# ---------------------------------------------------------------------------
# reduction modulo p


class Reducer:
    """Images of ``i``, ``sqrt6`` and ``sqrt3`` in F_{q^2} for ``q = 5 mod 12``.

    Each root is the smallest in the element order.  ``sqrt3`` falls outside
    F_q, so Frobenius negates it as ``sigma`` does.  For ``q = 17 mod 24``
    ``sqrt6`` also falls outside F_q and :attr:`twist` is ``i``.
    """

    def __init__(self, q: int):
        if q % 12 != 5:
            raise ValueError(f"need q = 5 mod 12, got q={q}")
        p, r = prime_power(q)
        self.ctx: FieldCtx = build_field(p, r)
        ctx = self.ctx
        roots = [ctx.sqrt(ctx.neg(1)), ctx.sqrt(ctx.from_int(6)), ctx.sqrt(ctx.from_int(3))]
        if any(x is None for x in roots):  # pragma: no cover - impossible for q = 5 mod 12
            raise FieldError("square root not found")
        self.i, self.sqrt6, self.sqrt3 = (int(x) for x in roots)
        self.twist = self.i if q % 24 == 17 else 1
        mono = []
        for m in range(8):
            x = 1
            for bit, g in enumerate((self.i, self.sqrt6, self.sqrt3)):
                if (m >> bit) & 1:
                    x = int(ctx.mul(x, g))
            mono.append(x)
        self._mono = mono

    def rational(self, a: Fraction) -> int:
        ctx = self.ctx
        if a.denominator % ctx.p == 0:
            raise FieldError(f"{a} is not {ctx.p}-integral")
        num = ctx.from_int(a.numerator)
        return int(ctx.mul(num, ctx.inv(ctx.from_int(a.denominator))))

    def __call__(self, x: NfElem) -> int:
        ctx = self.ctx
        out = 0
        for m, a in enumerate(x.c):
            if a:
                out = int(ctx.add(out, ctx.mul(self.rational(a), self._mono[m])))
        return out

    def matrix(self, M, twist: bool = True) -> np.ndarray:
        out = np.array([[self(x) for x in row] for row in M], dtype=np.int64)
        if twist and self.twist != 1:
            out = np.asarray(self.ctx.mul(out, self.twist), dtype=np.int64)
        return out

    def sigma_compatible(self, x: NfElem) -> bool:
        """``reduce(sigma x) == frobenius(reduce x)`` for this element."""
        return self(x.sigma()) == int(frobenius(self.ctx, self(x)))


def reduce_mod(q: int, target=None) -> MubSet:
    """Reduce the example to F_{q^2}: bases ``B1, B2`` plus four extra vectors.

    ``target`` defaults to :func:`quiver_set`; B0 stays implicit.
    """
    red = Reducer(q)
    B1, B2, V = quiver_set() if target is None else target
    return MubSet(ctx=red.ctx, d=6, bases=[red.matrix(B1), red.matrix(B2)], extras=red.matrix(V))


def nf_matrix_to_json(M) -> list:
    return [[x.to_json() for x in row] for row in M]


def nf_matrix_from_json(obj) -> list[list[NfElem]]:
    return [[NfElem.from_json(x) for x in row] for row in obj]
