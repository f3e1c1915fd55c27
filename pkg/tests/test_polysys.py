from __future__ import annotations

import itertools
import json
from fractions import Fraction

import numpy as np
import pytest

from finmub.gf import FieldError, build_field
from finmub.hermitian import MubSet, verify_mub_set
from finmub.polysys import evaluate_system, generate_system, mubset_assignment, nonresidue
from finmub.search import search_full

# Printed d=2 system for two bases; upper case stands for the Greek partner
# of each roman letter (E = epsilon, F = phi, G = gamma, H = chi, S = sigma,
# T = tau, U = mu, V = nu).
PRINTED_II = [
    "e g + E G + f h + F H",
    "- e G + E g - f H + F h",
    "s u + S U + t v + T V",
    "- s U + S u - t V + T v",
]
PRINTED_III = [
    "e e s s + e e S S + 2 e f s t + 2 e f S T + 2 e F s T - 2 e F S t + E E s s + E E S S - 2 E f s T"
    " + 2 E f S t + 2 E F s t + 2 E F S T + f f t t + f f T T + F F t t + F F T T - 2",
    "e e u u + e e U U + 2 e f u v + 2 e f U V + 2 e F u V - 2 e F U v + E E u u + E E U U - 2 E f u V"
    " + 2 E f U v + 2 E F u v + 2 E F U V + f f v v + f f V V + F F v v + F F V V - 2",
    "g g s s + g g S S + 2 g h s t + 2 g h S T + 2 g H s T - 2 g H S t + G G s s + G G S S - 2 G h s T"
    " + 2 G h S t + 2 G H s t + 2 G H S T + h h t t + h h T T + H H t t + H H T T - 2",
    "g g u u + g g U U + 2 g h u v + 2 g h U V + 2 g H u V - 2 g H U v + G G u u + G G U U - 2 G h u V"
    " + 2 G h U v + 2 G H u v + 2 G H U V + h h v v + h h V V + H H v v + H H V V - 2",
]
# (basis, col, row) of each roman letter; the Greek partner is the imaginary part
LETTERS = {"e": (1, 0, 0), "f": (1, 0, 1), "g": (1, 1, 0), "h": (1, 1, 1),
           "s": (2, 0, 0), "t": (2, 0, 1), "u": (2, 1, 0), "v": (2, 1, 1)}
GREEK = dict(zip("EFGHSTUV", "efghstuv"))


def _parse(text, sysm):
    poly = {}
    for term in text.replace("- ", "+ -").split("+ "):
        toks = term.split()
        if not toks:
            continue
        coef = 1
        if toks and toks[0].lstrip("-").isdigit():
            coef = int(toks.pop(0))
        elif toks and toks[0].startswith("-"):
            coef = -1
            toks[0] = toks[0][1:]
            if not toks[0]:
                toks.pop(0)
        exps = {}
        for t in toks:
            if t.lstrip("-").isdigit():
                coef *= int(t)
                continue
            part = 1 if t in GREEK else 0
            b, col, row = LETTERS[GREEK.get(t, t)]
            v = sysm.var_index(b, col, row, part)
            exps[v] = exps.get(v, 0) + 1
        mono = tuple(sorted(exps.items()))
        poly[mono] = poly.get(mono, 0) + coef
    return {m: c for m, c in poly.items() if c}


def test_counts_and_degrees():
    sysm = generate_system(2, 2, -1)
    assert len(sysm.polys) == 16
    assert sysm.counts() == {"I": 8, "II": 4, "III": 4}
    big = generate_system(6, 3, -1)
    assert big.counts() == {"I": 108, "II": 90, "III": 108}
    assert len(big.polys) == 306 and len(big.variables) == 216
    assert generate_system(2, 1).counts() == {"I": 4, "II": 2, "III": 0}
    for k, (t, _) in enumerate(sysm.polys):
        assert sysm.degree(k) == (4 if t == "III" else 2)


def test_every_variable_used():
    sysm = generate_system(3, 2, 2)
    used = {v for _, p in sysm.polys for m in p for v, _ in m}
    assert used == set(range(len(sysm.variables)))


def test_type_one_matches_printed_up_to_scale():
    sysm = generate_system(2, 2, -1)
    for t, p in sysm.polys:
        if t != "I":
            continue
        # d*(x^2 + y^2) - 1 is 2*(x^2 + y^2 - 1/2) for one entry x + i*y
        squares = sorted(m[0][0] for m in p if m)
        assert set(p) == {((v, 2),) for v in squares} | {()}
        assert squares[1] == squares[0] + 1 and squares[0] % 2 == 0
        assert sorted(p.values()) == [-1, 2, 2]


def test_type_two_matches_printed():
    sysm = generate_system(2, 2, -1)
    got = [p for t, p in sysm.polys if t == "II"]
    assert got == [_parse(s, sysm) for s in PRINTED_II]


def test_type_three_support_matches_printed():
    sysm = generate_system(2, 2, -1)
    got = [p for t, p in sysm.polys if t == "III"]
    want = [_parse(s, sysm) for s in PRINTED_III]
    for g, w in zip(got, want):
        assert set(g) == set(w)
        # non-constant terms agree after dividing by d^2 = 4
        assert all(Fraction(g[m], 4) == w[m] for m in w if m)
        # constant: cleared form gives -d = -2; the printed -2 is left unscaled
        assert g[()] == -2 and w[()] == -2


def test_zero_assignment():
    sysm = generate_system(2, 2, -1)
    res = evaluate_system(sysm, [0] * len(sysm.variables))
    assert res[:8] == [-1] * 8
    assert all(r == 0 for r in res[8:12])
    assert res[12:] == [-2] * 4


def test_missing_variable():
    sysm = generate_system(2, 1)
    with pytest.raises(ValueError):
        evaluate_system(sysm, {"b1c0r0re": 1})
    with pytest.raises(ValueError):
        evaluate_system(sysm, [0, 1])


def test_exact_rational_solution():
    # complete real-imaginary pair in d=2 over Q(i): (1, 1)/sqrt2 is not
    # rational, but (1/2 + i/2, 1/2 - i/2) columns are
    sysm = generate_system(2, 1, -1)
    h = Fraction(1, 2)
    vals = {}
    for col, row, (x, y) in [(0, 0, (h, h)), (0, 1, (h, -h)), (1, 0, (h, h)), (1, 1, (-h, h))]:
        vals[sysm.var_index(1, col, row, 0)] = x
        vals[sysm.var_index(1, col, row, 1)] = y
    assert all(r == 0 for r in evaluate_system(sysm, vals))


@pytest.mark.parametrize("d,q", [(2, 3), (2, 7), (4, 7), (3, 5)])
def test_vanishes_on_witnesses(d, q):
    rep = search_full(d, q)
    for w in rep.witnesses:
        vals, c = mubset_assignment(w)
        sysm = generate_system(d, len(w.bases), c)
        assert all(r == 0 for r in evaluate_system(sysm, vals, w.ctx))


def test_perturbation_breaks_a_witness():
    rep = search_full(2, 7)
    w = rep.witnesses[0]
    vals, c = mubset_assignment(w)
    sysm = generate_system(2, len(w.bases), c)
    for k in range(len(vals)):
        bad = list(vals)
        bad[k] = (bad[k] + 1) % 7
        assert any(evaluate_system(sysm, bad, w.ctx))


def test_nonresidue():
    assert nonresidue(build_field(7)) == 3
    assert nonresidue(build_field(3)) == 2
    assert nonresidue(build_field(5)) == 2
    with pytest.raises(FieldError):
        nonresidue(build_field(2))
    with pytest.raises(FieldError):
        nonresidue(build_field(3, 2))


def _eval_mod_p(sysm, vals, p):
    """Vectorised evaluation over F_p; ``vals`` has one row per assignment."""
    out = []
    for _, poly in sysm.polys:
        acc = np.zeros(len(vals), dtype=np.int64)
        for m, c in poly.items():
            term = np.full(len(vals), c % p, dtype=np.int64)
            for v, e in m:
                term = term * vals[:, v] ** e % p
            acc = (acc + term) % p
        out.append(acc)
    return np.stack(out, axis=1)


def _to_matrices(ctx, sysm, vals, iota):
    """Entries x + iota*y for every assignment row, basis by basis."""
    d, n = sysm.d, sysm.n
    x = vals[:, 0::2].reshape(-1, n, d, d)  # (assignment, basis, col, row)
    y = vals[:, 1::2].reshape(-1, n, d, d)
    z = np.asarray(ctx.add(x, ctx.mul(iota, y)), dtype=np.int64)
    return z.transpose(0, 1, 3, 2)  # rows first


def _accepted_vec(ctx, mats):
    """Direct vectorised MUB check for ``mats`` of shape (N, n, d, d)."""
    from finmub.gf import frobenius, inv_d, norm

    half = inv_d(ctx, mats.shape[-1])

    def inner(A, B, a, b):
        terms = ctx.mul(frobenius(ctx, A[..., :, a]), B[..., :, b])
        acc = terms[..., 0]
        for r in range(1, terms.shape[-1]):
            acc = ctx.add(acc, terms[..., r])
        return np.asarray(acc)

    ok = np.all(norm(ctx, mats) == half, axis=(1, 2, 3))
    n, d = mats.shape[1], mats.shape[-1]
    for b in range(n):
        B = mats[:, b]
        for a1 in range(d):
            for a2 in range(d):
                g = inner(B, B, a1, a2)
                ok &= g == (1 if a1 == a2 else 0)
    for b1, b2 in itertools.combinations(range(n), 2):
        for a1 in range(d):
            for a2 in range(d):
                ok &= norm(ctx, inner(mats[:, b1], mats[:, b2], a1, a2)) == half
    return ok


def test_brute_force_one_basis_d2_q3():
    ctx = build_field(3)
    c = nonresidue(ctx)
    iota = ctx.sqrt(c)
    sysm = generate_system(2, 1, c)
    vals = np.array(list(itertools.product(range(3), repeat=8)), dtype=np.int64)
    zero = ~_eval_mod_p(sysm, vals, 3).any(axis=1)
    mats = _to_matrices(ctx, sysm, vals, iota)
    accepted = np.array([verify_mub_set(MubSet(ctx, 2, [M[0]])).passed for M in mats])
    assert np.array_equal(zero, accepted)
    # 16 first columns, each with 4 orthogonal partners
    assert zero.sum() == 64
    # the generic evaluator agrees on a sample
    for k in np.flatnonzero(zero)[:5]:
        assert not any(evaluate_system(sysm, vals[k].tolist(), ctx))


def test_brute_force_two_bases_d2_q3():
    ctx = build_field(3)
    c = nonresidue(ctx)
    iota = ctx.sqrt(c)
    sysm = generate_system(2, 2, c)
    # all solutions of the type I equations on one entry, then every combination
    pairs = np.array(list(itertools.product(range(3), repeat=2)), dtype=np.int64)
    ok = (pairs[:, 0] ** 2 - c * pairs[:, 1] ** 2) * 2 % 3 == 1
    entry = pairs[ok]
    assert len(entry) == 4
    combos = np.array(list(itertools.product(range(4), repeat=8)), dtype=np.int64)
    vals = entry[combos].reshape(len(combos), 16)
    zero = ~_eval_mod_p(sysm, vals, 3).any(axis=1)
    mats = _to_matrices(ctx, sysm, vals, iota)
    accepted = _accepted_vec(ctx, mats)
    assert np.array_equal(zero, accepted)
    # the reference verifier agrees on every solution and on a sample of the rest
    for k in np.flatnonzero(zero):
        assert verify_mub_set(MubSet(ctx, 2, list(mats[k]))).passed
    for k in np.flatnonzero(~zero)[::101]:
        assert not verify_mub_set(MubSet(ctx, 2, list(mats[k]))).passed
    assert zero.sum() > 0


def test_json_and_text_export():
    sysm = generate_system(2, 2, -1)
    obj = json.loads(sysm.dumps())
    assert obj["vars"] == sysm.variables
    assert len(obj["polys"]) == 16
    assert obj["polys"][0]["type"] == "I"
    text = sysm.to_text().splitlines()
    assert text[0].startswith("#")
    assert text[1] == "I: 2*b1c0r0re^2 + 2*b1c0r0im^2 - 1"
    assert len(text) == 17
