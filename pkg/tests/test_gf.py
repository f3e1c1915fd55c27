from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from finmub.gf import (
    FieldCtx,
    FieldError,
    build_field,
    check_dimension,
    factorize,
    frobenius,
    inv_d,
    is_prime,
    norm,
    prime_power,
    solve_norm,
)

from .helpers import field

QS = [2, 3, 4, 5, 7, 8, 9, 25, 27]


def test_prime_helpers():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    assert prime_power(49) == (7, 2)
    assert prime_power(2) == (2, 1)
    with pytest.raises(FieldError):
        prime_power(12)


@pytest.mark.parametrize("q", QS)
def test_group_structure(q):
    ctx = field(q)
    n = q * q
    assert ctx.order == n - 1
    # exp/log are inverse bijections on the nonzero elements
    assert sorted(ctx.exp.tolist()) == list(range(1, n))
    assert np.array_equal(ctx.log[ctx.exp], np.arange(n - 1))
    # gamma is primitive
    assert ctx.exp[0] == 1 and ctx.exp[1] == ctx.gamma


@pytest.mark.parametrize("q", QS)
def test_norm_one_group(q):
    ctx = field(q)
    U = ctx.norm_one_group()
    assert len(U) == q + 1 == len(set(U.tolist()))
    assert np.all(norm(ctx, U) == 1)
    assert int(ctx.pow(ctx.u, q + 1)) == 1


@pytest.mark.parametrize("q", QS)
def test_frobenius_fixes_exactly_base_field(q):
    ctx = field(q)
    xs = np.arange(q * q)
    fixed = frobenius(ctx, xs) == xs
    assert np.array_equal(fixed, ctx.in_base(xs))
    assert np.all(frobenius(ctx, frobenius(ctx, xs)) == xs)


@pytest.mark.parametrize("q", QS)
def test_norm_is_onto_base_field(q):
    ctx = field(q)
    nz = np.arange(1, q * q)
    vals = norm(ctx, nz)
    assert set(vals.tolist()) == set(range(1, q))
    for t in range(1, q):
        x = solve_norm(ctx, t)
        assert int(norm(ctx, x)) == t
        # minimal discrete log among all preimages
        assert ctx.log[x] == min(int(ctx.log[y]) for y in nz[vals == t])


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(QS), st.data())
def test_field_axioms(q, data):
    ctx = field(q)
    el = st.integers(0, q * q - 1)
    a, b, c = data.draw(el), data.draw(el), data.draw(el)
    assert ctx.add(a, b) == ctx.add(b, a)
    assert ctx.mul(a, b) == ctx.mul(b, a)
    assert ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))
    assert ctx.add(a, ctx.neg(a)) == 0
    assert ctx.sub(ctx.add(a, b), b) == a
    if a:
        assert ctx.mul(a, ctx.inv(a)) == 1
    # Frobenius is a ring automorphism and the norm is multiplicative
    assert frobenius(ctx, ctx.add(a, b)) == ctx.add(frobenius(ctx, a), frobenius(ctx, b))
    assert norm(ctx, ctx.mul(a, b)) == ctx.mul(norm(ctx, a), norm(ctx, b))


def test_prime_field_embeds_integers():
    ctx = build_field(7)
    assert [ctx.from_int(n) for n in (0, 6, 7, -1)] == [0, 6, 0, 6]
    assert ctx.add(3, 5) == 1
    assert ctx.mul(3, 5) == 1


def test_sqrt():
    ctx = build_field(5)
    for x in range(1, 25):
        s = ctx.sqrt(x)
        if ctx.in_base(x):
            # every element of F_q is a square in F_{q^2}
            assert s is not None
        if s is not None:
            assert ctx.mul(s, s) == x
    squares = {int(ctx.mul(x, x)) for x in range(25)}
    for x in range(25):
        assert (ctx.sqrt(x) is not None) == (x in squares)


def test_inv_d_and_dimension_checks():
    ctx = build_field(7)
    assert ctx.mul(inv_d(ctx, 6), 6) == 1
    with pytest.raises(FieldError):
        inv_d(ctx, 14)
    with pytest.raises(FieldError):
        check_dimension(build_field(3), 6)
    with pytest.warns(UserWarning):
        check_dimension(build_field(5), 6)


@pytest.mark.parametrize("q", [3, 4, 9])
def test_json_round_trip(q):
    ctx = field(q)
    again = FieldCtx.from_json(ctx.to_json())
    assert again == ctx
    assert again.gamma == ctx.gamma


def test_from_json_rejects_mismatch():
    obj = build_field(7).to_json()
    obj["gamma"] = [1, 0]
    with pytest.raises(FieldError):
        FieldCtx.from_json(obj)


def test_build_field_is_deterministic():
    assert build_field(3, 2) is build_field(3, 2)
    assert build_field(3, 2).to_json() == build_field(3, 2).to_json()
