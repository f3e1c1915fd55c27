"""Unitary-space predicates over F_{q^2}.

Vectors are 1-d integer arrays of field elements and bases are ``d x d``
arrays whose columns are the basis vectors.  The computational basis B0 is
never stored in a :class:`MubSet`; it is always counted.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .gf import FieldCtx, frobenius, inv_d, norm, solve_norm

__all__ = [
    "MubSet",
    "VerificationReport",
    "Violation",
    "compact_vector",
    "gram",
    "herm_inner",
    "is_unit",
    "is_mu",
    "is_unitary",
    "is_hadamard",
    "verify_mub_set",
    "trace_pairings",
    "trace_pairing_check",
    "dump_certificate",
    "load_certificate",
]


def _field_sum(ctx: FieldCtx, terms: np.ndarray, axis: int = 0) -> np.ndarray:
    """Sum field elements along ``axis`` (addition is digit-wise mod p)."""
    dig = ctx.digits(terms).sum(axis=axis) % ctx.p
    return np.asarray(ctx.from_digits(dig))


def gram(ctx: FieldCtx, B, C) -> np.ndarray:
    """Matrix of Hermitian products ``B^dagger C``."""
    B = np.atleast_2d(np.asarray(B, dtype=np.int64))
    C = np.atleast_2d(np.asarray(C, dtype=np.int64))
    if B.shape[0] != C.shape[0]:
        raise ValueError(f"dimension mismatch: {B.shape[0]} != {C.shape[0]}")
    terms = ctx.mul(frobenius(ctx, B)[:, :, None], C[:, None, :])
    return _field_sum(ctx, np.asarray(terms), axis=0)


def herm_inner(ctx: FieldCtx, x, y) -> int:
    """``<x, y> = sum_j x_j^q * y_j``."""
    x = np.asarray(x, dtype=np.int64)
    y = np.asarray(y, dtype=np.int64)
    if x.shape != y.shape or x.ndim != 1:
        raise ValueError(f"dimension mismatch: {x.shape} vs {y.shape}")
    return int(gram(ctx, x[:, None], y[:, None])[0, 0])


def compact_vector(ctx: FieldCtx, d: int, exps, delta: int | None = None) -> np.ndarray:
    """The vector ``(delta, delta*u**c_2, ..., delta*u**c_d)``."""
    if delta is None:
        delta = solve_norm(ctx, inv_d(ctx, d, check=False))
    exps = np.concatenate([[0], np.asarray(exps, dtype=np.int64)])
    if len(exps) != d:
        raise ValueError(f"expected {d - 1} exponents, got {len(exps) - 1}")
    return np.asarray(ctx.mul(delta, ctx.u_pow(exps)))


def is_unit(ctx: FieldCtx, x) -> bool:
    return herm_inner(ctx, x, x) == 1


def is_mu(ctx: FieldCtx, d: int, x, y) -> bool:
    """Mutual unbiasedness of two unit vectors: ``N(<x, y>) == 1/d``."""
    if not (is_unit(ctx, x) and is_unit(ctx, y)):
        raise ValueError("is_mu is only defined for unit vectors")
    return norm(ctx, herm_inner(ctx, x, y)) == inv_d(ctx, d, check=False)


def is_unitary(ctx: FieldCtx, B) -> bool:
    B = np.asarray(B)
    return bool(np.array_equal(gram(ctx, B, B), np.eye(B.shape[1], dtype=np.int64)))


def is_hadamard(ctx: FieldCtx, d: int, B) -> bool:
    """True iff ``B`` is unitary with every entry of norm ``1/d``."""
    B = np.asarray(B)
    if B.shape != (d, d):
        return False
    if not np.all(norm(ctx, B) == inv_d(ctx, d, check=False)):
        return False
    return is_unitary(ctx, B)


# ---------------------------------------------------------------------------


@dataclass
class MubSet:
    """Pairwise mutually unbiased bases in F_{q^2}^d.

    ``bases`` excludes the computational basis, which is implicit.
    ``extras`` is an optional ``d x k`` array of further vectors meant to be
    orthonormal and unbiased to every basis.
    """

    ctx: FieldCtx
    d: int
    bases: list[np.ndarray] = field(default_factory=list)
    extras: np.ndarray | None = None

    def __post_init__(self):
        self.bases = [np.asarray(B, dtype=np.int64) for B in self.bases]
        if self.extras is not None:
            self.extras = np.asarray(self.extras, dtype=np.int64).reshape(self.d, -1)

    @property
    def size(self) -> int:
        """Number of bases, B0 included."""
        return len(self.bases) + 1

    @property
    def n_extras(self) -> int:
        return 0 if self.extras is None else self.extras.shape[1]

    def all_bases(self) -> list[np.ndarray]:
        return [np.eye(self.d, dtype=np.int64)] + list(self.bases)

    def to_json(self) -> dict:
        delta = solve_norm(self.ctx, inv_d(self.ctx, self.d, check=False))
        enc = lambda M: [[None if x == 0 else int(self.ctx.log[x]) for x in row] for row in np.asarray(M)]  # noqa: E731
        out = {
            "field": self.ctx.to_json(),
            "d": self.d,
            "delta_dlog": int(self.ctx.log[delta]),
            "bases": [enc(B) for B in self.bases],
            "extras": enc(self.extras) if self.extras is not None else [],
        }
        return out

    @classmethod
    def from_json(cls, obj: dict) -> MubSet:
        ctx = FieldCtx.from_json(obj["field"])
        d = int(obj["d"])

        def dec(M):
            return np.array(
                [[0 if x is None else int(ctx.exp[int(x) % ctx.order]) for x in row] for row in M],
                dtype=np.int64,
            ).reshape(d, -1)

        extras = obj.get("extras") or None
        return cls(
            ctx=ctx,
            d=d,
            bases=[dec(B) for B in obj["bases"]],
            extras=dec(extras) if extras else None,
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, MubSet):
            return NotImplemented
        return self.to_json() == other.to_json()


def dump_certificate(mubs: MubSet, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(mubs.to_json(), fh, indent=1)


def load_certificate(path) -> MubSet:
    with open(path, encoding="utf-8") as fh:
        return MubSet.from_json(json.load(fh))


@dataclass(frozen=True)
class Violation:
    """One failed condition; ``value`` is the offending inner product."""

    kind: str
    left: tuple[int, int]
    right: tuple[int, int]
    value: int
    norm: int


@dataclass
class VerificationReport:
    passed: bool
    n_bases: int
    n_extras: int
    checks: dict[str, tuple[int, int]]  # name -> (passed, total)
    violations: list[Violation]

    def summary(self) -> str:
        lines = [f"{'PASS' if self.passed else 'FAIL'}: {self.n_bases} bases, {self.n_extras} extra vectors"]
        for name, (ok, total) in self.checks.items():
            lines.append(f"  {name}: {ok}/{total}")
        for v in self.violations[:20]:
            lines.append(f"  violated {v.kind}: {v.left} vs {v.right} <,>={v.value} N={v.norm}")
        return "\n".join(lines)


def verify_mub_set(mubs: MubSet) -> VerificationReport:
    """Check unitarity, pairwise unbiasedness and the extra vectors.

    Basis 0 in the report is the computational basis.  Failures come back
    as :class:`Violation` records rather than exceptions.
    """
    ctx, d = mubs.ctx, mubs.d
    one_over_d = inv_d(ctx, d, check=False)
    bases = mubs.all_bases()
    checks: dict[str, list[int]] = {}
    violations: list[Violation] = []

    def tally(name, ok_mask, G, kind, i, j, cells="all"):
        # cells: "diag", "upper" (a < b, the Gram matrix is Hermitian) or "all"
        ok_mask = np.asarray(ok_mask, dtype=bool)
        stat = checks.setdefault(name, [0, 0])
        for a, b in np.ndindex(ok_mask.shape):
            if (cells == "diag" and a != b) or (cells == "upper" and a >= b):
                continue
            stat[1] += 1
            if ok_mask[a, b]:
                stat[0] += 1
            else:
                violations.append(Violation(kind, (i, a), (j, b), int(G[a, b]), int(norm(ctx, G[a, b]))))

    for i, B in enumerate(bases):
        if B.shape != (d, d):
            raise ValueError(f"basis {i} has shape {B.shape}")
        G = gram(ctx, B, B)
        tally("unit", G == 1, G, "unit", i, i, "diag")
        tally("orthogonal", G == 0, G, "orthogonal", i, i, "upper")
    for i, j in combinations(range(len(bases)), 2):
        G = gram(ctx, bases[i], bases[j])
        tally("mutually_unbiased", norm(ctx, G) == one_over_d, G, "mutually_unbiased", i, j)
    if mubs.extras is not None and mubs.extras.size:
        X = mubs.extras
        k = len(bases)
        G = gram(ctx, X, X)
        tally("extras_unit", G == 1, G, "unit", k, k, "diag")
        tally("extras_orthogonal", G == 0, G, "orthogonal", k, k, "upper")
        for i, B in enumerate(bases):
            G = gram(ctx, B, X)
            tally("extras_mutually_unbiased", norm(ctx, G) == one_over_d, G, "mutually_unbiased", i, k)
    return VerificationReport(
        passed=not violations,
        n_bases=len(bases),
        n_extras=mubs.n_extras,
        checks={k: (v[0], v[1]) for k, v in checks.items()},
        violations=violations,
    )


# ---------------------------------------------------------------------------
# trace form on d x d matrices


def _projector(ctx: FieldCtx, v: np.ndarray) -> np.ndarray:
    return np.asarray(ctx.mul(v[:, None], frobenius(ctx, v)[None, :]))


def _shifted(ctx: FieldCtx, P: np.ndarray, one_over_d: int) -> np.ndarray:
    out = P.copy()
    idx = np.arange(P.shape[0])
    out[idx, idx] = ctx.sub(P[idx, idx], one_over_d)
    return out


def _trace_form(ctx: FieldCtx, A: np.ndarray, B: np.ndarray) -> int:
    """``Tr(A^dagger B) = sum_{ij} A_ij^q B_ij``."""
    terms = ctx.mul(frobenius(ctx, A), B).ravel()
    return int(_field_sum(ctx, np.asarray(terms)))


def trace_pairings(ctx: FieldCtx, d: int, B, C) -> np.ndarray:
    """``Tr((pi_b - I/d)^dagger (pi_c - I/d))`` for all columns ``b``, ``c``.

    Computed literally from the projector matrices, not via inner products.
    """
    B, C = np.asarray(B), np.asarray(C)
    one_over_d = inv_d(ctx, d, check=False)
    PB = [_shifted(ctx, _projector(ctx, B[:, a]), one_over_d) for a in range(B.shape[1])]
    PC = [_shifted(ctx, _projector(ctx, C[:, b]), one_over_d) for b in range(C.shape[1])]
    return np.array([[_trace_form(ctx, X, Y) for Y in PC] for X in PB], dtype=np.int64)


def trace_pairing_check(ctx: FieldCtx, d: int, B, C) -> bool:
    """Cross pairings all zero and within-basis pairings equal to ``-1/d``.

    This is the orthogonality of shifted projector subspaces that holds for
    any pair of mutually unbiased bases.
    """
    minus = ctx.neg(inv_d(ctx, d, check=False))
    for M in (B, C):
        T = trace_pairings(ctx, d, M, M)
        off = ~np.eye(T.shape[0], dtype=bool)
        if not np.all(T[off] == minus):
            return False
    return bool(np.all(trace_pairings(ctx, d, B, C) == 0))
