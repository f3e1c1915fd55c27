"""Known MUB constructions carried over to F_{q^2}.

The Wootters-Fields sets use entries ``zeta**Tr(m j^2 + t j) / sqrt(l^k)`` for
odd ``l``.  Frobenius inverts ``zeta`` exactly as complex conjugation does,
so the complex identities survive reduction provided ``sqrt(l^k)`` is fixed by
Frobenius; otherwise every entry is multiplied by an element of norm ``-1``.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass
from math import gcd

import numpy as np

from .gf import (
    FieldCtx,
    FieldError,
    _pmulmod,
    _smallest_irreducible,
    build_field,
    factorize,
    frobenius,
    inv_d,
    is_prime,
    norm,
    prime_power,
    solve_norm,
)
from .hermitian import MubSet, gram, is_hadamard

__all__ = [
    "WfParams",
    "Fixture",
    "wf_mubs",
    "wf_needs_twist",
    "find_norm_minus_one",
    "tensor_mubs",
    "admissible_q",
    "fixture_dardo71",
    "dardo71_report",
]


@dataclass(frozen=True)
class WfParams:
    """Parameters of a Wootters-Fields set in dimension ``l**k`` over ``ctx``."""

    l: int  # noqa: E741
    k: int
    ctx: FieldCtx

    @property
    def d(self) -> int:
        return self.l**self.k

    def validate(self) -> None:
        l, k, q = self.l, self.k, self.ctx.q  # noqa: E741
        if not is_prime(l) or k < 1:
            raise ValueError(f"need a prime l and k >= 1, got l={l}, k={k}")
        if self.ctx.p == l:
            raise FieldError(f"characteristic {l} divides d={self.d}")
        if l == 2:
            if k >= 3:
                raise ValueError("d = 2**k with k >= 3 is not supported")
            if q % 4 != 3:
                raise ValueError(f"l=2 needs q = 3 mod 4, got q={q}")
        elif (q + 1) % self.d:
            raise ValueError(f"need q = -1 mod {self.d}, got q={q}")


# complete sets in dimensions 2 and 4 as exponents of i (rows = coordinates)
_D2 = [[(0, 0), (0, 2)], [(0, 1), (0, 3)]]
_D4 = [
    [(0, 0, 0, 0), (0, 0, 2, 2), (0, 2, 0, 2), (0, 2, 2, 0)],
    [(0, 0, 1, 3), (0, 0, 3, 1), (0, 2, 1, 1), (0, 2, 3, 3)],
    [(0, 1, 0, 3), (0, 1, 2, 1), (0, 3, 0, 1), (0, 3, 2, 3)],
    [(0, 1, 1, 2), (0, 1, 3, 0), (0, 3, 1, 0), (0, 3, 3, 2)],
]


def find_norm_minus_one(ctx: FieldCtx) -> int:
    """The element of least discrete log with norm ``-1``."""
    if ctx.p == 2:
        warnings.warn("characteristic 2: -1 = 1, returning 1", stacklevel=2)
        return 1
    return solve_norm(ctx, ctx.neg(1))


def wf_needs_twist(params: WfParams) -> bool:
    """True when ``sqrt(l^k)`` is moved by Frobenius."""
    ctx = params.ctx
    s = ctx.sqrt(ctx.from_int(params.d))
    return int(frobenius(ctx, s)) != s


def _scale(params: WfParams) -> int:
    ctx = params.ctx
    s = ctx.sqrt(ctx.from_int(params.d))
    c = ctx.inv(s)
    if int(frobenius(ctx, s)) != s:
        c = ctx.mul(c, find_norm_minus_one(ctx))
    return int(c)


def _trace_table(l: int, k: int) -> tuple[list[tuple[int, ...]], np.ndarray, np.ndarray]:
    """Elements of F_{l^k}, their products and absolute traces."""
    mod = _smallest_irreducible(l, k)
    elems = list(itertools.product(range(l), repeat=k))  # little-endian coefficients
    index = {e: i for i, e in enumerate(elems)}
    n = len(elems)
    mul = np.zeros((n, n), dtype=np.int64)
    for a, b in itertools.product(range(n), repeat=2):
        prod = _pmulmod(list(elems[a]), list(elems[b]), mod, l)
        prod = tuple(prod + [0] * (k - len(prod)))
        mul[a, b] = index[prod]
    # Tr(x) = sum of Frobenius conjugates; read off the constant coefficient
    tr = np.zeros(n, dtype=np.int64)
    for a in range(n):
        acc = [0] * k
        y = a
        for _ in range(k):
            acc = [(s + c) % l for s, c in zip(acc, elems[y])]
            z = y
            for _ in range(l - 1):
                z = int(mul[z, y])
            y = z
        tr[a] = acc[0]
    return elems, mul, tr


def wf_mubs(params: WfParams) -> MubSet:
    """The complete set of ``l^k + 1`` Wootters-Fields MUBs over ``params.ctx``."""
    params.validate()
    ctx, l, k, d = params.ctx, params.l, params.k, params.d  # noqa: E741
    m = ctx.q + 1
    c = _scale(params)
    if l == 2:
        i_exp = m // 4
        table = _D2 if k == 1 else _D4
        bases = []
        for cols in table:
            E = np.array(cols, dtype=np.int64).T * i_exp
            bases.append(np.asarray(ctx.mul(c, ctx.u_pow(E)), dtype=np.int64))
        return MubSet(ctx=ctx, d=d, bases=bases)
    zeta_exp = m // l
    _, mul, tr = _trace_table(l, k)
    n = d
    sq = mul[np.arange(n), np.arange(n)]
    bases = []
    for a in range(n):
        E = np.empty((n, n), dtype=np.int64)
        for t in range(n):
            for j in range(n):
                arg = _field_add(l, k, int(mul[a, sq[j]]), int(mul[t, j]))
                E[j, t] = tr[arg]
        bases.append(np.asarray(ctx.mul(c, ctx.u_pow(E * zeta_exp)), dtype=np.int64))
    return MubSet(ctx=ctx, d=d, bases=bases)


def _field_add(l: int, k: int, a: int, b: int) -> int:
    """Addition of F_{l^k} elements in the index order of :func:`_trace_table`."""
    out, w = 0, 1
    for _ in range(k):
        out += ((a % l + b % l) % l) * w
        a //= l
        b //= l
        w *= l
    return out


def _kron(ctx: FieldCtx, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    d1, d2 = A.shape[0], B.shape[0]
    P = np.asarray(ctx.mul(A[:, None, :, None], B[None, :, None, :]), dtype=np.int64)
    return P.reshape(d1 * d2, A.shape[1] * B.shape[1])


def tensor_mubs(A: MubSet, B: MubSet) -> MubSet:
    """Pair the i-th bases of ``A`` and ``B`` by Kronecker product."""
    if A.ctx != B.ctx:
        raise FieldError("tensor_mubs needs both sets over the same field")
    n = min(len(A.bases), len(B.bases))
    return MubSet(
        ctx=A.ctx,
        d=A.d * B.d,
        bases=[_kron(A.ctx, A.bases[i], B.bases[i]) for i in range(n)],
    )


def _congruences(d: int) -> list[tuple[int, int]]:
    """``(modulus, residue)`` pairs a prime power must satisfy for dimension ``d``."""
    out = []
    for l, k in sorted(factorize(d).items()):  # noqa: E741
        out.append((4, 3) if l == 2 else (l**k, l**k - 1))
    return out


def admissible_q(d: int, search_bound: int) -> list[tuple[int, int]]:
    """Prime powers ``q = p^r <= search_bound`` meeting every factor's congruence.

    Each odd prime-power factor ``l^k`` of ``d`` requires ``q = -1 mod l^k``;
    a power of two contributes ``q = 3 mod 4``.
    """
    if d < 2:
        raise ValueError("d must be at least 2")
    conds = _congruences(d)
    out = []
    for q in range(2, search_bound + 1):
        try:
            p, r = prime_power(q)
        except ValueError:
            continue
        if gcd(p, d) != 1:
            continue
        if all(q % mod == res for mod, res in conds):
            out.append((p, r))
    return out


# ---------------------------------------------------------------------------
# q = 71 fixtures in dimension 6


@dataclass(frozen=True)
class Fixture:
    """A ``d x d`` matrix ``delta * u**E`` given by its exponent matrix ``E``."""

    name: str
    exponents: tuple[tuple[int, ...], ...]

    @property
    def d(self) -> int:
        return len(self.exponents)

    def matrix(self, ctx: FieldCtx, k: int = 1) -> np.ndarray:
        """Entries with ``u`` replaced by the candidate generator ``u**k``."""
        delta = solve_norm(ctx, inv_d(ctx, self.d, check=False))
        E = (np.array(self.exponents, dtype=np.int64) * k) % (ctx.q + 1)
        return np.asarray(ctx.mul(delta, ctx.u_pow(E)), dtype=np.int64)


_H1 = (
    (0, 0, 0, 0, 0, 0),
    (54, 54, 6, 30, 30, 6),
    (71, 35, 27, 63, 27, 63),
    (54, 54, 30, 6, 6, 30),
    (35, 71, 39, 51, 15, 3),
    (35, 71, 15, 3, 39, 51),
)
_D0 = (
    (0, 0, 0, 0, 0, 0),
    (0, 36, 18, 54, 54, 18),
    (0, 18, 36, 18, 54, 54),
    (0, 54, 18, 36, 18, 54),
    (0, 54, 54, 18, 36, 18),
    (0, 18, 54, 54, 18, 36),
)


def fixture_dardo71():
    """The q=71 matrices ``H1`` and ``D(0)``, the field and candidate generators.

    The exponents refer to an unspecified generator of the norm-one group, so
    every ``k`` coprime to 72 (``u -> u**k``) is returned as a candidate.
    """
    ctx = build_field(71)
    cands = [k for k in range(1, ctx.q + 1) if gcd(k, ctx.q + 1) == 1]
    return Fixture("H1", _H1), Fixture("D(0)", _D0), ctx, cands


def dardo71_report() -> list[dict]:
    """Per-candidate Hadamard and unbiasedness status of ``H1`` and ``D(0)``."""
    H1, D0, ctx, cands = fixture_dardo71()
    one_over_d = inv_d(ctx, 6, check=False)
    rows = []
    for k in cands:
        A, B = H1.matrix(ctx, k), D0.matrix(ctx, k)
        rows.append(
            {
                "k": k,
                "H1_hadamard": is_hadamard(ctx, 6, A),
                "D0_hadamard": is_hadamard(ctx, 6, B),
                "mutually_unbiased": bool(np.all(norm(ctx, gram(ctx, A, B)) == one_over_d)),
            }
        )
    return rows
