"""Exhaustive search for maximal MUB sets in F_{q^2}^d.

Every non-B0 vector is normalised to ``(delta, delta*u**c_2, ..., delta*u**c_d)``
and stored as the mixed-radix index of its exponent tuple ``(c_2, ..., c_d)``
(base ``q+1``, ``c_2`` most significant).  For two such vectors
``<x, y> = N(delta) * S(y - x)`` with ``S(c) = 1 + sum_j u**c_j``, so every
pairwise relation is a lookup of the exponent difference in a precomputed
class table.

Symmetries used: column order and column phases inside each basis, a common
row permutation and a common row phase on all bases, and basis order.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .gf import FieldCtx, build_field, check_dimension, inv_d, prime_power, solve_norm
from .hermitian import MubSet

OTHER, ORTH, MU = 0, 1, 2

DEFAULT_TABLE_CAP = 2 * 2**30

__all__ = [
    "ORTH",
    "MU",
    "OTHER",
    "RatioClassTable",
    "SearchReport",
    "TableCapError",
    "build_ratio_table",
    "compute_M",
    "compute_nu",
    "canonical_form",
    "search_full",
    "to_exponent_form",
]


class TableCapError(MemoryError):
    """The dense class table would exceed the configured memory cap."""


@dataclass(frozen=True, eq=False)
class RatioClassTable:
    """Class (ORTH, MU or OTHER) of every exponent-difference tuple.

    ``classes`` is ``None`` in streaming mode, where lookups evaluate ``S``
    on the fly.
    """

    ctx: FieldCtx
    d: int
    classes: np.ndarray | None = field(repr=False)

    @property
    def m(self) -> int:
        return self.ctx.q + 1

    @property
    def size(self) -> int:
        return self.m ** (self.d - 1)

    @property
    def weights(self) -> np.ndarray:
        return self.m ** np.arange(self.d - 2, -1, -1, dtype=np.int64)

    def to_digits(self, idx) -> np.ndarray:
        idx = np.asarray(idx, dtype=np.int64)
        return (idx[..., None] // self.weights) % self.m

    def from_digits(self, dig) -> np.ndarray:
        return (np.asarray(dig, dtype=np.int64) % self.m) @ self.weights

    def lookup(self, idx) -> np.ndarray:
        idx = np.asarray(idx, dtype=np.int64)
        if self.classes is not None:
            return self.classes[idx]
        return _classify(self.ctx, self.d, self.to_digits(idx.ravel())).reshape(idx.shape)

    def diff(self, a_dig, b_dig) -> np.ndarray:
        """Indices of ``b - a`` for digit arrays (broadcasting)."""
        return self.from_digits(np.asarray(b_dig) - np.asarray(a_dig))

    def relation(self, a_dig, b_dig) -> np.ndarray:
        return self.lookup(self.diff(a_dig, b_dig))

    def count(self, cls: int) -> int:
        return int(np.count_nonzero(self.classes == cls))


def _classify(ctx: FieldCtx, d: int, exps: np.ndarray) -> np.ndarray:
    """Classes for an ``(n, d-1)`` array of exponent tuples."""
    Ud = ctx.digits(ctx.norm_one_group())
    acc = np.broadcast_to(ctx.digits(1), (len(exps), 2 * ctx.r)).copy()
    for j in range(exps.shape[1]):
        acc += Ud[exps[:, j]]
    S = np.asarray(ctx.from_digits(acc % ctx.p), dtype=np.int64)
    return _class_of_sum(ctx, d, S)


def _class_of_sum(ctx: FieldCtx, d: int, S: np.ndarray) -> np.ndarray:
    logS = ctx.log[S].astype(np.int64)
    nrm = np.where(S == 0, 0, ctx.exp[(logS * (ctx.q + 1)) % ctx.order])
    out = np.full(S.shape, OTHER, dtype=np.uint8)
    out[S == 0] = ORTH
    out[(S != 0) & (nrm == d % ctx.p)] = MU
    return out


def build_ratio_table(ctx: FieldCtx, d: int, max_bytes: int = DEFAULT_TABLE_CAP, streaming: bool = False) -> RatioClassTable:
    """Classify all ``(q+1)**(d-1)`` exponent-difference tuples.

    Raises :class:`TableCapError` when the dense table (one byte per entry)
    exceeds ``max_bytes`` unless ``streaming`` is set.
    """
    check_dimension(ctx, d)
    m = ctx.q + 1
    size = m ** (d - 1)
    if size > max_bytes:
        if streaming:
            return RatioClassTable(ctx, d, None)
        raise TableCapError(f"class table needs {size} bytes > cap {max_bytes}; use streaming mode")
    Ud = ctx.digits(ctx.norm_one_group()).astype(np.int16)
    # partial sums over the trailing coordinates, then one block per leading digit
    tail = ctx.digits(1)[None, :].astype(np.int16)
    for _ in range(d - 2):
        tail = ((tail[:, None, :] + Ud[None, :, :]) % ctx.p).reshape(-1, Ud.shape[1])
    classes = np.empty(size, dtype=np.uint8)
    block = len(tail)
    for c in range(m):
        S = np.asarray(ctx.from_digits((tail + Ud[c]) % ctx.p), dtype=np.int64)
        classes[c * block : (c + 1) * block] = _class_of_sum(ctx, d, S)
    classes.setflags(write=False)
    return RatioClassTable(ctx, d, classes)


# ---------------------------------------------------------------------------
# clique enumeration on ORTH graphs


def _adjacency(table: RatioClassTable, cand: np.ndarray, rel: int = ORTH) -> list[set[int]]:
    """For each position i, the set of positions j > i related to it."""
    dig = table.to_digits(cand)
    n = len(cand)
    out: list[set[int]] = []
    chunk = max(1, 4_000_000 // max(n, 1))
    for s in range(0, n, chunk):
        rows = table.relation(dig[s : s + chunk, None, :], dig[None, :, :]) == rel
        for k, row in enumerate(rows):
            i = s + k
            out.append(set(np.flatnonzero(row[i + 1 :]) + i + 1))
    return out


def _cliques(adj: list[set[int]], k: int, cands=None, prefix=()):
    """All ``k``-cliques as increasing position tuples."""
    if k == 0:
        yield prefix
        return
    pool = range(len(adj)) if cands is None else sorted(cands)
    for v in pool:
        nxt = adj[v] if cands is None else adj[v] & cands
        if len(nxt) >= k - 1:
            yield from _cliques(adj, k - 1, nxt, prefix + (v,))


def _max_clique(adj: list[set[int]]) -> int:
    best = 0

    def grow(size, cands):
        nonlocal best
        if size > best:
            best = size
        for v in sorted(cands):
            if size + len(cands) <= best:
                return
            cands = cands - {v}
            grow(size + 1, cands & adj[v])

    grow(0, set(range(len(adj))))
    return best


def _mu_filter(table: RatioClassTable, cand: np.ndarray, vectors) -> np.ndarray:
    """Subset of ``cand`` unbiased to every vector index in ``vectors``."""
    if len(cand) == 0:
        return cand
    dig = table.to_digits(cand)
    keep = np.ones(len(cand), dtype=bool)
    for v in vectors:
        keep &= table.relation(table.to_digits(v), dig) == MU
    return cand[keep]


# ---------------------------------------------------------------------------
# symmetry group actions on exponent form


def _full(table: RatioClassTable, idx) -> np.ndarray:
    dig = table.to_digits(idx)
    return np.concatenate([np.zeros(dig.shape[:-1] + (1,), dtype=np.int64), dig], axis=-1)


def _perms(d: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(d))), dtype=np.int64)


_PERM_CACHE: dict[int, np.ndarray] = {}


def _perm_table(d: int) -> np.ndarray:
    if d not in _PERM_CACHE:
        _PERM_CACHE[d] = _perms(d)
    return _PERM_CACHE[d]


def _apply(table: RatioClassTable, F: np.ndarray, shifts: np.ndarray, perms: np.ndarray, negate: np.ndarray) -> np.ndarray:
    """Images of the full tuples ``F`` (n, d) under K group elements.

    Element k subtracts ``shifts[k]`` (a common row phase), permutes rows by
    ``perms[k]``, renormalises every column to a leading zero exponent and
    optionally negates (Frobenius).  Returns indices of shape ``(K, n)``.
    """
    m = table.m
    dt = np.int32 if table.size < 2**31 else np.int64
    F = np.asarray(F, dtype=dt)
    D = F[:, perms] - np.take_along_axis(np.asarray(shifts, dtype=dt), perms, 1)[None]  # (n, K, d)
    W = D[..., 1:] - D[..., :1]
    if negate.any():
        W = np.where(negate[None, :, None], -W, W)
    W %= m
    out = W[..., 0].copy()
    for j in range(1, W.shape[-1]):
        out *= m
        out += W[..., j]
    return out.T


def _group(table: RatioClassTable, shifts: np.ndarray, galois: bool):
    """All (shift, perm, negate) combinations for the given shift vectors."""
    P = _perm_table(table.d)
    negs = [False, True] if galois else [False]
    s, p, g = np.meshgrid(np.arange(len(shifts)), np.arange(len(P)), np.arange(len(negs)), indexing="ij")
    s, p, g = s.ravel(), p.ravel(), g.ravel()
    return shifts[s], P[p], np.asarray(negs)[g]


def _lexmin_rows(keys: np.ndarray) -> np.ndarray:
    """Positions of the lexicographically smallest rows."""
    order = np.lexsort(keys.T[::-1])
    best = keys[order[0]]
    return order[np.all(keys[order] == best, axis=1)]


def _is_lexmin(rows: np.ndarray, target) -> bool:
    """True iff no row of ``rows`` is lexicographically below ``target``."""
    for j, t in enumerate(target):
        col = rows[:, j]
        if (col < t).any():
            return False
        rows = rows[col == t]
        if not len(rows):
            break
    return True


def _basis_images(table: RatioClassTable, idx, galois: bool = False):
    """Sorted images of one basis under every transformation moving one of
    its columns to the all-delta vector."""
    F = _full(table, np.asarray(idx, dtype=np.int64))
    group = _group(table, F, galois)
    keys = np.sort(_apply(table, F, *group), axis=1)
    return keys, group


def _canonical_basis(table: RatioClassTable, idx, galois: bool = False, cache: dict | None = None):
    key = (tuple(idx), galois)
    if cache is not None and key in cache:
        return cache[key]
    keys, group = _basis_images(table, idx, galois)
    pos = _lexmin_rows(keys)
    out = tuple(int(x) for x in keys[pos[0]]), tuple(g[pos] for g in group)
    if cache is not None:
        cache[key] = out
    return out


def _best_image(img: np.ndarray, n: int, d: int):
    """Lexicographically least candidate among ``(K, n*d + e)`` images.

    The first ``n*d`` columns are ``n`` bases, the rest extra vectors.
    """
    K = img.shape[0]
    B = np.sort(img[:, : n * d].reshape(K, n, d), axis=2)
    flat = B.reshape(K * n, d)
    order = np.lexsort([flat[:, j] for j in range(d - 1, -1, -1)] + [np.repeat(np.arange(K), n)])
    B = flat[order].reshape(K, n * d)
    E = np.sort(img[:, n * d :], axis=1)
    best = _lexmin_rows(np.concatenate([B, E], axis=1))[0]
    rows = B[best].reshape(n, d)
    return tuple(tuple(int(x) for x in r) for r in rows), tuple(int(x) for x in E[best])


def _canonical_exp_set(table: RatioClassTable, bases: list[tuple[int, ...]], galois: bool = False, extras=(), cache=None):
    """Canonical representative of a set of bases given as index tuples.

    The minimal image always starts with the minimal single-basis form, so
    only transformations realising that form are tried.  Returns
    ``(sorted tuple of sorted bases, sorted extras)``.
    """
    canon = [_canonical_basis(table, b, galois, cache) for b in bases]
    first = min(c[0] for c in canon)
    groups = [c[1] for c in canon if c[0] == first]
    shifts, perms, negs = (np.concatenate(parts) for parts in zip(*groups))
    F = _full(table, np.asarray([v for b in bases for v in b] + list(extras), dtype=np.int64))
    return _best_image(_apply(table, F, shifts, perms, negs), len(bases), table.d)


def _invert(table: RatioClassTable, shift: np.ndarray, perm: np.ndarray, neg: bool):
    """Inverse of one group element in ``(shift, perm, negate)`` form."""
    inv = np.argsort(perm)
    s = shift[perm] % table.m
    return (s if neg else (-s) % table.m), inv, bool(neg)


@dataclass
class _Orbits:
    """Orbits of bases through the all-delta vector.

    ``member`` maps every such basis (sorted index tuple) to its orbit number
    and one group element carrying it onto the orbit representative;
    ``stab`` holds the elements fixing each representative.
    """

    reps: list[tuple[int, ...]]
    member: dict
    stab: list[tuple[np.ndarray, np.ndarray, np.ndarray]]
    galois: bool

    def rank_of(self, table: RatioClassTable, basis) -> int:
        """Orbit number of a basis given as a sorted index tuple."""
        F = _full(table, np.asarray(basis, dtype=np.int64))
        moved = _apply(table, F, F[:1], np.arange(table.d)[None, :], np.zeros(1, dtype=bool))[0]
        return self.member[tuple(sorted(int(x) for x in moved))][0]

    def canonical(self, table: RatioClassTable, bases, extras=()):
        d, _m = table.d, table.m
        flat = np.asarray([v for b in bases for v in b] + list(extras), dtype=np.int64)
        F = _full(table, flat)
        ident = np.arange(d)[None, :]
        no = np.zeros(1, dtype=bool)
        hits = []
        for k, b in enumerate(bases):
            Fb = F[k * d : (k + 1) * d]
            moved = tuple(sorted(int(x) for x in _apply(table, Fb, Fb[:1], ident, no)[0]))
            hits.append((self.member[moved][0], k))
        best_orbit = min(h[0] for h in hits)
        out = None
        for orbit, k in hits:
            if orbit != best_orbit:
                continue
            Fb = F[k * d : (k + 1) * d]
            moved = _apply(table, F, Fb[:1], ident, no)[0]
            key = tuple(sorted(int(x) for x in moved[k * d : (k + 1) * d]))
            s, p, g = self.member[key][1]
            moved = _apply(table, _full(table, moved), s[None, :], p[None, :], np.array([g]))[0]
            cand = _best_image(_apply(table, _full(table, moved), *self.stab[orbit]), len(bases), d)
            if out is None or cand < out:
                out = cand
        return out


def _orbits(table: RatioClassTable, bases, galois: bool) -> _Orbits:
    """Partition ``bases`` (all containing index 0) into symmetry orbits."""
    found: dict[tuple[int, ...], None] = {}
    rep_list = []
    for basis in bases:
        if basis in found:
            continue
        keys, _ = _basis_images(table, basis, galois)
        orbit = {tuple(int(x) for x in row) for row in keys}
        for o in orbit:
            found[o] = None
        rep_list.append(min(orbit))
    rep_list.sort()
    member: dict = {}
    stab = []
    for i, rep in enumerate(rep_list):
        keys, (S, P, G) = _basis_images(table, rep, galois)
        rows = [tuple(int(x) for x in row) for row in keys]
        for j, row in enumerate(rows):
            if row not in member:
                member[row] = (i, _invert(table, S[j], P[j], G[j]))
        fix = np.array([row == rep for row in rows])
        stab.append((S[fix], P[fix], G[fix]))
    return _Orbits(rep_list, member, stab, galois)


# ---------------------------------------------------------------------------


@dataclass
class SearchReport:
    d: int
    q: int
    M: int
    nu: int
    witnesses: list[MubSet]
    stats: dict = field(default_factory=dict)
    nu_witness: MubSet | None = None

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "q": self.q,
            "M": self.M,
            "nu": self.nu,
            "witnesses": [w.to_json() for w in self.witnesses],
            "stats": dict(self.stats),
        }

    def key(self) -> tuple:
        """Everything except timing; equal across thread counts."""
        js = self.to_json()
        js["stats"] = {k: v for k, v in js["stats"].items() if k != "seconds"}
        return repr(js)


def _first_bases(table: RatioClassTable, galois: bool):
    """Orbits of first bases containing the all-delta vector.

    Returns ``(orbits, n_total)``.
    """
    d = table.d
    O0 = np.flatnonzero(table.classes == ORTH) if table.classes is not None else _stream_class(table, ORTH)
    adj = _adjacency(table, O0)
    bases = [(0,) + tuple(int(O0[i]) for i in cl) for cl in _cliques(adj, d - 1)]
    return _orbits(table, bases, galois), len(bases)


def _stream_class(table: RatioClassTable, cls: int) -> np.ndarray:
    out = []
    chunk = 1 << 20
    for s in range(0, table.size, chunk):
        idx = np.arange(s, min(s + chunk, table.size), dtype=np.int64)
        out.append(idx[table.lookup(idx) == cls])
    return np.concatenate(out)


def _explore(table: RatioClassTable, orbits: _Orbits, rank: int, mu0: np.ndarray):
    """All maximal chains of bases starting from representative ``rank``.

    Every set is explored from the orbit of its lowest-ranked basis, with
    later bases in increasing order, each least among its images under the
    stabiliser of the chain so far.  Returns
    ``(best_size, chains, nodes)`` where ``chains`` pairs the non-B0 bases of
    every chain reaching ``best_size`` (B0 counted) with the candidates
    unbiased to the whole chain.
    """
    d = table.d
    first = orbits.reps[rank]
    stab = orbits.stab[rank]
    best = 0
    chains: list[tuple] = []
    nodes = 1

    def rec(chain, cand, H):
        nonlocal best, chains, nodes
        extended = False
        if len(cand) >= d:
            adj = _adjacency(table, cand)
            moved = _apply(table, _full(table, cand), *H) if len(H[0]) > 1 else None
            for cl in _cliques(adj, d):
                basis = tuple(int(cand[i]) for i in cl)
                if len(chain) > 1 and basis <= chain[-1]:
                    continue
                if orbits.rank_of(table, basis) < rank:
                    continue
                sub = H
                if moved is not None:
                    img = np.sort(moved[:, list(cl)], axis=1)
                    if not _is_lexmin(img, basis):
                        continue
                    fix = np.all(img == np.asarray(basis), axis=1)
                    sub = tuple(h[fix] for h in H)
                nodes += 1
                extended = True
                rec(chain + (basis,), _mu_filter(table, cand, basis), sub)
        if not extended:
            size = len(chain) + 1
            if size > best:
                best, chains = size, [(chain, cand)]
            elif size == best:
                chains.append((chain, cand))

    rec((first,), _mu_filter(table, mu0, first[1:]), stab)
    return best, chains, nodes


def _to_mubset(table: RatioClassTable, bases, extras=()) -> MubSet:
    ctx, d = table.ctx, table.d
    delta = solve_norm(ctx, inv_d(ctx, d, check=False))

    def mat(idx):
        F = _full(table, np.asarray(idx, dtype=np.int64))  # (n, d)
        return np.asarray(ctx.mul(delta, ctx.u_pow(F.T)), dtype=np.int64).reshape(d, -1)

    ext = mat(extras) if len(extras) else None
    return MubSet(ctx=ctx, d=d, bases=[mat(b) for b in bases], extras=ext)


def _max_clique_members(table: RatioClassTable, cand: np.ndarray):
    """One maximum ORTH-clique among ``cand`` (lexicographically first)."""
    if len(cand) == 0:
        return ()
    adj = _adjacency(table, cand)
    size = _max_clique(adj)
    for cl in _cliques(adj, size):
        return tuple(int(cand[i]) for i in cl)
    return ()


def compute_M(ctx: FieldCtx, d: int, table: RatioClassTable, threads: int = 1, galois: bool = False):
    """Maximum number of MUBs (B0 included) and all inequivalent maximal sets.

    Returns ``(M, witnesses, stats)``; each witness is a tuple of sorted
    candidate-index tuples (the non-B0 bases) in canonical form, paired with
    the candidates unbiased to all of it.
    """
    t0 = time.perf_counter()
    orbits, n_first = _first_bases(table, galois)
    reps = orbits.reps
    if not reps:
        stats = {"first_bases": n_first, "first_reps": 0, "nodes": 0, "prunes": 0}
        return 1, [], stats
    mu0 = np.flatnonzero(table.classes == MU) if table.classes is not None else _stream_class(table, MU)

    def work(rank):
        return _explore(table, orbits, rank, mu0)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(work, range(len(reps))))
    else:
        results = [work(i) for i in range(len(reps))]
    M = max(r[0] for r in results)
    found: dict = {}
    nodes = 0
    for best, chains, n in results:
        nodes += n
        if best != M:
            continue
        for chain, cand in chains:
            key = orbits.canonical(table, list(chain))[0]
            if key not in found:
                found[key] = cand
    witnesses = sorted(found.items())
    stats = {
        "first_bases": n_first,
        "first_reps": len(reps),
        "nodes": nodes,
        "prunes": n_first - len(reps),
        "seconds": time.perf_counter() - t0,
    }
    return M, witnesses, stats


def compute_nu(ctx: FieldCtx, d: int, table: RatioClassTable, witnesses, M: int | None = None):
    """Largest orthonormal set unbiased to every basis of some maximal set.

    ``witnesses`` are the canonical sets returned by :func:`compute_M`.
    When only B0 exists (``M == 1``) the value is reported as 0.
    Returns ``(nu, (witness, extras))`` for the best set.
    """
    if M == 1 or not witnesses:
        return 0, None
    best, arg = -1, None
    for bases, _ in witnesses:
        vecs = [v for b in bases for v in b]
        cand = _mu_filter(table, _all_mu(table, bases[0]), vecs)
        members = _max_clique_members(table, cand)
        if len(members) > best:
            best, arg = len(members), (bases, members)
    return best, arg


def _all_mu(table: RatioClassTable, first) -> np.ndarray:
    """Candidates unbiased to the first vector of ``first`` (an index tuple)."""
    v = first[0]
    if table.classes is not None:
        base = np.flatnonzero(table.classes == MU)
    else:
        base = _stream_class(table, MU)
    return np.sort(table.from_digits(table.to_digits(base) + table.to_digits(v)))


def canonical_form(mubs: MubSet, galois: bool = False) -> MubSet:
    """Lexicographically minimal representative of ``mubs`` up to equivalence.

    Equivalence: column permutations and column phases within each basis,
    a common row permutation and common row phases, and basis order
    (plus Frobenius when ``galois`` is set).
    """
    if not mubs.bases:
        return MubSet(mubs.ctx, mubs.d, [], mubs.extras)
    table = RatioClassTable(mubs.ctx, mubs.d, None)
    bases, extras = to_exponent_form(mubs)
    key, ext = _canonical_exp_set(table, bases, galois, extras)
    return _to_mubset(table, key, ext)


def to_exponent_form(mubs: MubSet):
    """Bases (and extras) as tuples of candidate indices.

    Every entry must have norm ``1/d``; columns are normalised so their
    first entry is ``delta``.
    """
    ctx, d = mubs.ctx, mubs.d
    delta = solve_norm(ctx, inv_d(ctx, d, check=False))
    table = RatioClassTable(ctx, d, None)
    ld = int(ctx.log[delta])

    def conv(M):
        L = ctx.log[np.asarray(M)].astype(np.int64)
        if np.any(L < 0):
            raise ValueError("entry 0 cannot be normalised")
        rel = (L - ld) % ctx.order
        if np.any(rel % (ctx.q - 1)):
            raise ValueError("entries do not all have norm 1/d")
        E = rel // (ctx.q - 1)
        E = (E - E[:1, :]) % table.m
        return tuple(sorted(int(x) for x in table.from_digits(E[1:, :].T)))

    bases = [conv(B) for B in mubs.bases]
    extras = conv(mubs.extras) if mubs.extras is not None and mubs.extras.size else ()
    return bases, extras


def search_full(
    d: int,
    q: int,
    threads: int = 1,
    galois: bool = False,
    max_bytes: int = DEFAULT_TABLE_CAP,
    streaming: bool = False,
) -> SearchReport:
    """Compute ``M_d(F_{q^2})`` and ``nu_d(F_{q^2})`` exhaustively."""
    t0 = time.perf_counter()
    p, r = prime_power(q)
    ctx = build_field(p, r)
    table = build_ratio_table(ctx, d, max_bytes=max_bytes, streaming=streaming)
    M, witnesses, stats = compute_M(ctx, d, table, threads=threads, galois=galois)
    nu, arg = compute_nu(ctx, d, table, witnesses, M)
    if not 1 <= M <= d + 1:
        raise AssertionError(f"M={M} violates 1 <= M <= d+1")
    stats = dict(stats)
    stats["witnesses"] = len(witnesses)
    stats["seconds"] = time.perf_counter() - t0
    nu_witness = _to_mubset(table, arg[0], arg[1]) if arg else None
    return SearchReport(
        d=d,
        q=q,
        M=M,
        nu=nu,
        witnesses=[_to_mubset(table, w) for w, _ in witnesses],
        stats=stats,
        nu_witness=nu_witness,
    )
