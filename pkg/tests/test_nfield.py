from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from finmub.gf import FieldError, frobenius
from finmub.hermitian import verify_mub_set
from finmub.nfield import (
    I,
    OMEGA,
    ONE,
    SQRT3,
    SQRT6,
    NfElem,
    Reducer,
    nf_inner,
    nf_matrix_from_json,
    nf_matrix_to_json,
    nf_norm,
    quiver_set,
    reduce_mod,
    verify_quiver_char0,
)


def _random_elem(rng, lo=-5, hi=6):
    return NfElem(tuple(Fraction(int(a), int(b)) for a, b in zip(rng.integers(lo, hi, 8), rng.integers(1, 4, 8))))


def test_generators():
    assert I * I == -ONE
    assert SQRT6 * SQRT6 == 6 * ONE
    assert SQRT3 * SQRT3 == 3 * ONE
    assert OMEGA**3 == ONE and OMEGA != ONE
    assert OMEGA.sigma() == OMEGA * OMEGA
    assert nf_norm(OMEGA) == ONE
    assert nf_norm(2 - SQRT3) == ONE
    assert nf_norm(SQRT3 / 3) == NfElem.rational(Fraction(-1, 3))


def test_field_axioms_random():
    rng = np.random.default_rng(1)
    for _ in range(50):
        a, b, c = (_random_elem(rng) for _ in range(3))
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        if a:
            assert a * a.inverse() == ONE
            assert (b / a) * a == b
        # sigma is an involutive automorphism fixing K
        assert a.sigma().sigma() == a
        assert (a * b).sigma() == a.sigma() * b.sigma()
        assert nf_norm(a).in_K()


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        NfElem.rational(0).inverse()


def test_quiver_entries_match_printed_matrices():
    B1, B2, V = quiver_set()
    s6 = SQRT6
    assert B1[1][1] * s6 == SQRT3 - 2
    assert B2[5][0] * s6 == -SQRT3 - 2
    assert V[1][0] * s6 == OMEGA * OMEGA * (2 - SQRT3)
    assert all(x * s6 == ONE for x in B1[0])


def test_verify_char0():
    rep = verify_quiver_char0()
    assert rep.passed, rep.summary()
    assert rep.checks == {
        "entry_norm": (72, 72),
        "unit": (12, 12),
        "orthogonal": (30, 30),
        "mutually_unbiased": (108, 108),
        "extras_unit": (4, 4),
        "extras_orthogonal": (6, 6),
        "extras_mutually_unbiased": (72, 72),
    }


def test_entries_have_negative_norm_when_unscaled():
    # (2 - sqrt3) has norm 1 but sqrt3 itself has norm -3
    assert nf_norm(SQRT3) == NfElem.rational(-3)
    x = [ONE, SQRT3]
    assert nf_inner(x, x) == NfElem.rational(-2)


@pytest.mark.parametrize("q", [5, 29])
def test_reduction_homomorphism(q):
    red = Reducer(q)
    ctx = red.ctx
    rng = np.random.default_rng(q)
    for _ in range(50):
        a, b = _random_elem(rng, -3, 4), _random_elem(rng, -3, 4)
        assert red(a * b) == ctx.mul(red(a), red(b))
        assert red(a + b) == ctx.add(red(a), red(b))
        assert red(a.sigma()) == frobenius(ctx, red(a))
        assert red.sigma_compatible(a)


def test_reduction_at_17_mod_24_flips_sqrt6():
    red = Reducer(17)
    assert red.twist == red.i
    assert not red.sigma_compatible(SQRT6)
    assert red.sigma_compatible(SQRT3) and red.sigma_compatible(I)


@pytest.mark.parametrize("q", [5, 17, 29, 41, 53])
def test_reduce_mod_verifies(q):
    mubs = reduce_mod(q)
    assert mubs.size == 3 and mubs.n_extras == 4
    rep = verify_mub_set(mubs)
    assert rep.passed, rep.summary()


def test_reduce_mod_without_twist_fails_at_17():
    red = Reducer(17)
    B1, B2, V = quiver_set()
    from finmub.hermitian import MubSet

    plain = MubSet(red.ctx, 6, [red.matrix(B1, twist=False), red.matrix(B2, twist=False)])
    assert not verify_mub_set(plain).passed


def test_reducer_rejects_bad_q():
    with pytest.raises(ValueError):
        Reducer(7)
    red = Reducer(5)
    with pytest.raises(FieldError):
        red.rational(Fraction(1, 5))


def test_json_round_trip():
    B1, _, V = quiver_set()
    assert nf_matrix_from_json(nf_matrix_to_json(B1)) == B1
    assert nf_matrix_from_json(nf_matrix_to_json(V)) == V
