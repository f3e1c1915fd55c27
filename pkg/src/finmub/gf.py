"""Finite field tower F_p < F_q < F_{q^2} backed by discrete-log tables.

Elements of F_{q^2} are plain ints in ``range(q*q)``.  An element
``a0 + a1*x`` (``x`` a root of the extension modulus) is stored as
``a0 + q*a1`` where ``a0, a1`` are F_q indices; an F_q element with
coefficient vector ``(c0, ..., c_{r-1})`` over F_p has index
``sum(c_i * p**i)``.  F_q is therefore the set of indices below ``q``,
``0`` is zero and ``1`` is one.

Multiplication, inversion, Frobenius and the relative norm all go through
the log tables; addition works digit-wise mod p.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass, field
from math import gcd

import numpy as np

DEFAULT_MAX_Q = 2**13

__all__ = [
    "FieldCtx",
    "FieldError",
    "build_field",
    "frobenius",
    "norm",
    "solve_norm",
    "is_prime",
    "prime_power",
    "inv_d",
]


class FieldError(ValueError):
    """Raised for invalid field parameters."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorisation by trial division."""
    out: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, r)`` with ``q == p**r`` or raise FieldError."""
    fac = factorize(q) if q > 1 else {}
    if len(fac) != 1:
        raise FieldError(f"{q} is not a prime power")
    ((p, r),) = fac.items()
    return p, r


# ---------------------------------------------------------------------------
# polynomials over F_p, lists of ints, lowest degree first


def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], m: list[int], p: int) -> list[int]:
    a = _ptrim(list(a))
    inv_lead = pow(m[-1], -1, p)
    while len(a) >= len(m):
        c = a[-1] * inv_lead % p
        shift = len(a) - len(m)
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _ptrim(a)
    return a


def _pmulmod(a: list[int], b: list[int], m: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _pmod(out, m, p)


def _ppowmod(a: list[int], e: int, m: list[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(a, m, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, m, p)
        base = _pmulmod(base, base, m, p)
        e >>= 1
    return result


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _ptrim(list(a)), _ptrim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _psub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _ptrim([(x - y) % p for x, y in zip(a, b)])


def _is_irreducible(f: list[int], p: int) -> bool:
    """Rabin's irreducibility test for a monic ``f`` over F_p."""
    n = len(f) - 1
    if n == 1:
        return True
    x = [0, 1]
    if _psub(_ppowmod(x, p**n, f, p), x, p):
        return False
    for ell in factorize(n):
        h = _psub(_ppowmod(x, p ** (n // ell), f, p), x, p)
        if len(_pgcd(f, h, p)) != 1:
            return False
    return True


def _smallest_irreducible(p: int, r: int) -> list[int]:
    # coefficient tuples (c0, ..., c_{r-1}) in lexicographic order
    for coeffs in itertools.product(range(p), repeat=r):
        f = list(coeffs) + [1]
        if _is_irreducible(f, p):
            return f
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class FieldCtx:
    """The tower F_p < F_q < F_{q^2} with log tables.

    Attributes
    ----------
    p, r, q : int
        Characteristic, degree and ``q = p**r``.
    base_modulus : tuple of int
        Monic irreducible of degree ``r`` over F_p, lowest degree first.
    ext_modulus : tuple of int
        Monic irreducible ``x^2 + b*x + c`` over F_q as F_q indices
        ``(c, b, 1)``.
    gamma : int
        Generator of F_{q^2}^x.
    exp, log : ndarray
        ``exp[k] = gamma**k`` for ``k < q^2 - 1``; ``log[x]`` is the
        discrete log of ``x`` with ``log[0] == -1``.
    """

    p: int
    r: int
    q: int
    base_modulus: tuple[int, ...]
    ext_modulus: tuple[int, int, int]
    gamma: int
    exp: np.ndarray = field(repr=False)
    log: np.ndarray = field(repr=False)

    @property
    def order(self) -> int:
        """Size of the multiplicative group of F_{q^2}."""
        return self.q * self.q - 1

    @property
    def u(self) -> int:
        """Generator ``gamma**(q-1)`` of the norm-one subgroup."""
        return int(self.exp[self.q - 1])

    def u_pow(self, c) -> np.ndarray | int:
        """``u**c`` for an int or an integer array of exponents."""
        k = (np.asarray(c) % (self.q + 1)) * (self.q - 1)
        out = self.exp[k]
        return int(out) if np.ndim(out) == 0 else out

    def norm_one_group(self) -> np.ndarray:
        return self.exp[np.arange(self.q + 1) * (self.q - 1)]

    # arithmetic ----------------------------------------------------------

    def digits(self, x) -> np.ndarray:
        """F_p coordinates of ``x``, shape ``x.shape + (2r,)``."""
        x = np.asarray(x, dtype=np.int64)
        pw = self.p ** np.arange(2 * self.r, dtype=np.int64)
        return (x[..., None] // pw) % self.p

    def add(self, x, y):
        """Sum of two elements (ints or arrays)."""
        if self.r == 1:
            x, y = np.asarray(x, dtype=np.int64), np.asarray(y, dtype=np.int64)
            q = self.q
            out = (x + y) % q + q * ((x // q + y // q) % q)
            return int(out) if out.ndim == 0 else out
        return self.from_digits((self.digits(x) + self.digits(y)) % self.p)

    def neg(self, x):
        return self.from_digits((-self.digits(x)) % self.p)

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def mul(self, x, y):
        x = np.asarray(x)
        y = np.asarray(y)
        lx, ly = self.log[x].astype(np.int64), self.log[y].astype(np.int64)
        out = self.exp[(lx + ly) % self.order]
        out = np.where((lx < 0) | (ly < 0), 0, out)
        return int(out) if out.ndim == 0 else out

    def inv(self, x):
        lx = self.log[np.asarray(x)].astype(np.int64)
        if np.any(lx < 0):
            raise ZeroDivisionError("inverse of zero")
        out = self.exp[(-lx) % self.order]
        return int(out) if np.ndim(out) == 0 else out

    def pow(self, x, e: int):
        lx = self.log[np.asarray(x)].astype(np.int64)
        if e == 0:
            out = np.ones_like(lx)
        else:
            out = np.where(lx < 0, 0, self.exp[(lx * e) % self.order])
        return int(out) if np.ndim(out) == 0 else out

    def from_digits(self, dig):
        """Inverse of ``digits``: F_p coordinate vectors to element indices."""
        dig = np.asarray(dig, dtype=np.int64)
        weights = self.p ** np.arange(2 * self.r, dtype=np.int64)
        out = dig @ weights
        return int(out) if np.ndim(out) == 0 else out

    def from_int(self, n: int) -> int:
        """Image of the integer ``n`` in the prime field."""
        return n % self.p

    def in_base(self, x) -> np.ndarray | bool:
        """True where ``x`` lies in F_q."""
        out = np.asarray(x) < self.q
        return bool(out) if out.ndim == 0 else out

    def sqrt(self, x) -> int | None:
        """Smallest-index square root of ``x`` in F_{q^2}, or None."""
        if x == 0:
            return 0
        lx = int(self.log[x])
        if self.order % 2 == 1:
            # characteristic 2: squaring is bijective
            k = lx * pow(2, -1, self.order) % self.order
            return int(self.exp[k])
        if lx % 2:
            return None
        a = int(self.exp[lx // 2])
        return min(a, int(self.neg(a)))

    # serialisation -------------------------------------------------------

    def element_coeffs(self, x: int) -> list[int]:
        """F_p coefficient vector of ``x`` (length 2r, little-endian)."""
        return [int(v) for v in self.digits(x)]

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "r": self.r,
            "base_modulus": list(self.base_modulus),
            "ext_modulus": [self.element_coeffs(c)[: self.r] for c in self.ext_modulus],
            "gamma": self.element_coeffs(self.gamma),
        }

    @classmethod
    def from_json(cls, obj: dict) -> FieldCtx:
        ctx = build_field(int(obj["p"]), int(obj["r"]))
        for key in ("base_modulus", "ext_modulus", "gamma"):
            if key in obj and obj[key] != ctx.to_json()[key]:
                raise FieldError(f"certificate field model differs in {key}")
        return ctx

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldCtx) and (self.p, self.r) == (other.p, other.r)

    def __hash__(self) -> int:
        return hash((self.p, self.r))


def _fq_tuple_key(i: int, p: int, r: int) -> tuple[int, ...]:
    return tuple((i // p**j) % p for j in range(r))


_CACHE: dict[tuple[int, int], FieldCtx] = {}


def build_field(p: int, r: int = 1, max_q: int = DEFAULT_MAX_Q) -> FieldCtx:
    """Construct the tower for ``q = p**r``.

    The moduli are the lexicographically smallest monic irreducibles
    (coefficient tuples compared lowest degree first) and ``gamma`` is the
    smallest generator in the same order, so the result is reproducible.
    """
    if not is_prime(p):
        raise FieldError(f"p={p} is not prime")
    if r < 1:
        raise FieldError(f"r={r} must be positive")
    q = p**r
    if q > max_q:
        raise FieldError(f"q={q} exceeds the table cap {max_q}")
    key = (p, r)
    if key in _CACHE:
        return _CACHE[key]

    # F_q: index i <-> coefficient digits; multiplication by polynomial product
    base_mod = _smallest_irreducible(p, r) if r > 1 else [0, 1]
    qd = np.array([[(i // p**j) % p for j in range(r)] for i in range(q)], dtype=np.int64)
    w = p ** np.arange(r, dtype=np.int64)

    def fq_add(a, b):
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        if r == 1:
            return (a + b) % p
        if p == 2:
            return a ^ b
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        for pj in w:
            out += ((a // pj + b // pj) % p) * pj
        return out

    if r == 1:
        def fq_mul(a, b):
            return (np.asarray(a) * np.asarray(b)) % p
    else:
        # F_q log tables from a primitive element
        def pm(a: int, b: int) -> int:
            prod = _pmulmod(list(qd[a]), list(qd[b]), base_mod, p)
            return sum(c * p**j for j, c in enumerate(prod))

        qorder_primes = list(factorize(q - 1))
        x_ = None
        for g in range(2, q):
            gl = list(qd[g])
            if all(_ppowmod(gl, (q - 1) // ell, base_mod, p) != [1] for ell in qorder_primes):
                x_ = g
                break
        seq = [1]
        for _ in range(q - 2):
            seq.append(pm(seq[-1], x_))
        qexp = np.array(seq, dtype=np.int64)
        qlog = np.full(q, -1, dtype=np.int64)
        qlog[qexp] = np.arange(q - 1)

        def fq_mul(a, b):
            a, b = np.asarray(a), np.asarray(b)
            la, lb = qlog[a], qlog[b]
            return np.where((la < 0) | (lb < 0), 0, qexp[(la + lb) % (q - 1)])

    # extension modulus x^2 + b x + c, smallest (c, b) in tuple order
    elems = np.arange(q)
    sq = fq_mul(elems, elems)
    order_key = sorted(range(q), key=lambda i: _fq_tuple_key(i, p, r))
    ext = None
    for c in order_key:
        for b in order_key:
            vals = fq_add(fq_add(sq, fq_mul(b, elems)), np.full(q, c))
            if np.all(vals != 0):
                ext = (c, b, 1)
                break
        if ext:
            break
    c_, b_ = ext[0], ext[1]
    neg = lambda a: ((-qd[np.asarray(a)]) % p) @ w  # noqa: E731
    nb, nc = int(neg(b_)), int(neg(c_))

    def f2_mul(x, y):
        x, y = np.asarray(x), np.asarray(y)
        a0, a1 = x % q, x // q
        b0, b1 = y % q, y // q
        hi = fq_mul(a1, b1)  # coefficient of x^2 = -b x - c
        lo = fq_add(fq_mul(a0, b0), fq_mul(hi, nc))
        mid = fq_add(fq_add(fq_mul(a0, b1), fq_mul(a1, b0)), fq_mul(hi, nb))
        return lo + q * mid

    def f2_pow(x: int, e: int) -> int:
        result, base = 1, x
        while e:
            if e & 1:
                result = int(f2_mul(result, base))
            base = int(f2_mul(base, base))
            e >>= 1
        return result

    n = q * q - 1
    primes = list(factorize(n))
    gamma = None
    # F_{q^2} elements in tuple order: a0 digits, then a1 digits
    for a0t in itertools.product(range(p), repeat=r):
        a0 = sum(c * p**j for j, c in enumerate(a0t))
        for a1t in itertools.product(range(p), repeat=r):
            x = a0 + q * sum(c * p**j for j, c in enumerate(a1t))
            if x and all(f2_pow(x, n // ell) != 1 for ell in primes):
                gamma = x
                break
        if gamma is not None:
            break

    # exp table by block doubling
    exp = np.empty(n, dtype=np.int64)
    exp[0] = 1
    filled = 1
    while filled < n:
        step = min(filled, n - filled)
        g_f = f2_pow(gamma, filled)
        exp[filled : filled + step] = f2_mul(exp[:step], np.full(step, g_f))
        filled += step
    exp = exp.astype(np.int32)
    log = np.full(q * q, -1, dtype=np.int32)
    log[exp] = np.arange(n, dtype=np.int32)
    if np.count_nonzero(log >= 0) != n:
        raise AssertionError("gamma is not a generator")  # pragma: no cover
    for arr in (exp, log):
        arr.setflags(write=False)

    ctx = FieldCtx(
        p=p,
        r=r,
        q=q,
        base_modulus=tuple(int(c) for c in base_mod),
        ext_modulus=(int(c_), int(b_), 1),
        gamma=int(gamma),
        exp=exp,
        log=log,
    )
    _CACHE[key] = ctx
    return ctx


def frobenius(ctx: FieldCtx, x):
    """``x**q``, the non-trivial automorphism of F_{q^2} over F_q."""
    return ctx.pow(x, ctx.q)


def norm(ctx: FieldCtx, x):
    """Relative norm ``x * x**q``; the result lies in F_q."""
    return ctx.pow(x, ctx.q + 1)


def solve_norm(ctx: FieldCtx, t: int) -> int:
    """The element of smallest discrete log whose norm is ``t`` (``t`` in F_q^x)."""
    t = int(t)
    if t == 0 or t >= ctx.q:
        raise FieldError("target must be a nonzero element of F_q")
    # norm(gamma**k) = gamma**(k(q+1)); logs of F_q^x are multiples of q+1
    return int(ctx.exp[int(ctx.log[t]) // (ctx.q + 1)])


def inv_d(ctx: FieldCtx, d: int, *, check: bool = True) -> int:
    """The image of ``1/d`` in F_q."""
    if d % ctx.p == 0:
        raise FieldError(f"characteristic {ctx.p} divides d={d}")
    if check:
        check_dimension(ctx, d)
    return ctx.inv(ctx.from_int(d))


def check_dimension(ctx: FieldCtx, d: int) -> None:
    """Reject ``p | d``; warn for the degenerate regimes that are still allowed."""
    if gcd(d, ctx.p) != 1:
        raise FieldError(f"characteristic {ctx.p} divides d={d}")
    if ctx.p == 2:
        warnings.warn(
            "characteristic 2: mutual unbiasedness is taken literally as norm == 1/d",
            stacklevel=3,
        )
    elif d >= ctx.p:
        warnings.warn(f"d={d} >= p={ctx.p}: 1/d is read modulo p", stacklevel=3)
