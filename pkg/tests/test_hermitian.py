from __future__ import annotations

import numpy as np
import pytest

from finmub.constructions import WfParams, wf_mubs
from finmub.gf import build_field, frobenius, inv_d, norm
from finmub.hermitian import (
    MubSet,
    compact_vector,
    dump_certificate,
    gram,
    herm_inner,
    is_hadamard,
    is_mu,
    is_unit,
    is_unitary,
    load_certificate,
    trace_pairing_check,
    trace_pairings,
    verify_mub_set,
)


@pytest.fixture(scope="module")
def wf23():
    return wf_mubs(WfParams(2, 1, build_field(3)))


def test_herm_inner_is_sesquilinear():
    ctx = build_field(5)
    rng = np.random.default_rng(0)
    for _ in range(50):
        x, y, z = rng.integers(0, 25, size=(3, 3))
        a = int(rng.integers(0, 25))
        # <x, y>^q = <y, x>
        assert frobenius(ctx, herm_inner(ctx, x, y)) == herm_inner(ctx, y, x)
        # linear in the second slot
        lhs = herm_inner(ctx, x, ctx.add(y, ctx.mul(a, z)))
        rhs = ctx.add(herm_inner(ctx, x, y), ctx.mul(a, herm_inner(ctx, x, z)))
        assert lhs == rhs
        # the form of x with itself lies in F_q
        assert ctx.in_base(herm_inner(ctx, x, x))


def test_gram_matches_pairwise(wf23):
    ctx = wf23.ctx
    B, C = wf23.bases
    G = gram(ctx, B, C)
    for a in range(2):
        for b in range(2):
            assert G[a, b] == herm_inner(ctx, B[:, a], C[:, b])


def test_compact_vector_entries_have_norm_one_over_d():
    ctx = build_field(7)
    v = compact_vector(ctx, 3, (2, 5))
    assert v.shape == (3,)
    assert np.all(norm(ctx, v) == inv_d(ctx, 3))
    assert is_unit(ctx, v)
    w = compact_vector(ctx, 3, (0, 0))
    assert is_mu(ctx, 3, v, np.array([1, 0, 0]))
    assert not is_mu(ctx, 3, w, w)


def test_wf_pair_is_hadamard(wf23):
    for B in wf23.bases:
        assert is_unitary(wf23.ctx, B)
        assert is_hadamard(wf23.ctx, 2, B)
    assert not is_hadamard(wf23.ctx, 2, np.eye(2, dtype=np.int64))


def test_verify_accepts_complete_set(wf23):
    rep = verify_mub_set(wf23)
    assert rep.passed and not rep.violations
    assert rep.n_bases == 3
    assert rep.checks["unit"] == (6, 6)
    assert rep.checks["orthogonal"] == (3, 3)
    assert rep.checks["mutually_unbiased"] == (12, 12)
    assert "PASS" in rep.summary()


def test_verify_reports_corruption(wf23):
    bad = MubSet(wf23.ctx, 2, [B.copy() for B in wf23.bases])
    # gamma has norm -1 in F_3, so this breaks the entry norm
    bad.bases[1][0, 0] = wf23.ctx.mul(bad.bases[1][0, 0], wf23.ctx.gamma)
    rep = verify_mub_set(bad)
    assert not rep.passed
    kinds = {v.kind for v in rep.violations}
    assert "mutually_unbiased" in kinds and "unit" in kinds
    # every violation points into basis 2 or at its relation with another
    assert all(2 in (v.left[0], v.right[0]) for v in rep.violations)
    assert "FAIL" in rep.summary()


def test_verify_rejects_bad_shape(wf23):
    with pytest.raises(ValueError):
        verify_mub_set(MubSet(wf23.ctx, 2, [np.zeros((2, 3), dtype=np.int64)]))


def test_trace_pairings(wf23):
    ctx = wf23.ctx
    minus = ctx.neg(inv_d(ctx, 2))
    B, C = wf23.bases
    assert np.all(trace_pairings(ctx, 2, B, C) == 0)
    TB = trace_pairings(ctx, 2, B, B)
    assert np.all(np.diag(TB) == ctx.sub(1, inv_d(ctx, 2)))
    assert np.all(TB[~np.eye(2, dtype=bool)] == minus)
    assert trace_pairing_check(ctx, 2, B, C)
    assert not trace_pairing_check(ctx, 2, B, B)


def test_certificate_round_trip(tmp_path, wf23):
    path = tmp_path / "cert.json"
    dump_certificate(wf23, path)
    again = load_certificate(path)
    assert again == wf23
    assert verify_mub_set(again).passed
