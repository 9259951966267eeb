import json
import random

import numpy as np
import pytest

from fixtures import DUAL_LR_M2, SOCLE_M1, SOCLE_M2
from soctab import linalg
from soctab.embeddings import (
    BadIndex,
    Embedding,
    HomMatrix,
    PrimeMismatch,
    direct_sum,
    dual_embedding,
    embedding_from_json,
    embedding_from_spec,
    embedding_to_json,
    entries_below,
    hom_dim,
    hom_matrix,
    load_fixture,
    lr_tableau,
    picket,
    random_corpus,
    socle_tableau,
    standardize,
    zero_embedding,
)
from soctab.modules import Subspace
from soctab.tableaux import SkewTableau, check_lr, check_socle, to_chain


def test_picket():
    x = picket(2, 4, 5)
    assert x.shape == ((4,), (5,), (1,))
    assert picket(2, 0, 3).sub.dim == 0
    assert picket(2, 3, 3).gamma == ()
    assert picket(2, 0, 0).ambient.dim == 0
    with pytest.raises(BadIndex):
        picket(2, 4, 3)


def test_fixture_embeddings():
    m1, m2, m3 = (load_fixture(n) for n in ("m1", "m2", "m3"))
    for x in (m1, m2, m3):
        assert x.shape == ((4, 2), (5, 3, 2), (3, 1))
    assert socle_tableau(m2) == SOCLE_M2
    assert socle_tableau(m1) == SOCLE_M1
    assert lr_tableau(m1) == lr_tableau(m2)
    assert socle_tableau(m2) == socle_tableau(m3)
    assert socle_tableau(m1) != socle_tableau(m2)
    assert lr_tableau(m2) != lr_tableau(m3)
    assert lr_tableau(dual_embedding(m2)) == DUAL_LR_M2


def test_m1_lr_tableau_literal():
    # by hand from the summands: the radical layers of the sub have quotient
    # types (31), (321), (332), (432), (532), so the entries sit at
    # level 1: (2,2),(1,3); level 2: (3,2),(2,3); level 3: (4,1); level 4: (5,1)
    expected = SkewTableau(
        (4, 2),
        (5, 3, 2),
        (3, 1),
        {(2, 2): 1, (1, 3): 1, (3, 2): 2, (2, 3): 2, (4, 1): 3, (5, 1): 4},
    )
    assert lr_tableau(load_fixture("m1")) == expected
    assert to_chain(expected, "lr") == (
        (3, 1), (3, 2, 1), (3, 3, 2), (4, 3, 2), (5, 3, 2),
    )


def test_corpus_determinism():
    a = random_corpus(42, 25, 8)
    b = random_corpus(42, 25, 8)
    assert a == b
    assert len({json.dumps(s, sort_keys=True) for s in a}) == 25


def test_picket_tableaux():
    x = picket(2, 4, 5)
    assert dict(socle_tableau(x).entries) == {(r, 1): 6 - r for r in range(2, 6)}
    assert dict(lr_tableau(x).entries) == {(r, 1): r - 1 for r in range(2, 6)}
    empty_sub = picket(2, 0, 3)
    t = socle_tableau(empty_sub)
    assert t.shape == ((), (3,), (3,))


def test_direct_sum():
    m1 = direct_sum(direct_sum(picket(2, 4, 5), picket(2, 0, 3)), picket(2, 2, 2))
    assert m1.shape == ((4, 2), (5, 3, 2), (3, 1))
    assert to_chain(socle_tableau(m1), "socle") == (
        (5, 3, 2), (4, 3, 1), (3, 3), (3, 2), (3, 1),
    )
    x = picket(2, 2, 3)
    same = direct_sum(x, zero_embedding(2))
    assert same.shape == x.shape
    assert socle_tableau(same) == socle_tableau(x)
    with pytest.raises(PrimeMismatch):
        direct_sum(picket(2, 1, 2), picket(3, 1, 2))


def test_dual_embedding():
    m2 = load_fixture("m2")
    d = dual_embedding(m2)
    assert d.shape == ((3, 1), (5, 3, 2), (4, 2))
    dd = dual_embedding(d)
    for f in (socle_tableau, lr_tableau):
        assert f(dd) == f(m2)
    for ell, m in ((0, 2), (1, 3), (2, 2), (4, 5)):
        a = dual_embedding(picket(2, ell, m))
        b = picket(2, m - ell, m)
        assert a.shape == b.shape
        assert socle_tableau(a) == socle_tableau(b)
        assert lr_tableau(a) == lr_tableau(b)
    whole = dual_embedding(picket(2, 0, 4))
    assert whole.sub.dim == 4


def test_dual_fixture_equalities():
    # duals of the three bundled embeddings share invariants in the mirrored
    # pattern: equal LR tableaux upstairs become equal socle tableaux of the
    # duals, and conversely
    m1, m2, m3 = (load_fixture(n) for n in ("m1", "m2", "m3"))
    d1, d2, d3 = (dual_embedding(x) for x in (m1, m2, m3))
    assert socle_tableau(d1) == socle_tableau(d2)
    assert lr_tableau(d2) == lr_tableau(d3)
    assert lr_tableau(d1) != lr_tableau(d2)
    assert socle_tableau(d2) != socle_tableau(d3)


def test_random_corpus_tableaux_valid():
    for spec in random_corpus(21, 60, 9):
        x = embedding_from_spec(spec, 2)
        assert check_socle(socle_tableau(x))
        assert check_lr(lr_tableau(x))


def test_hom_dim_examples():
    assert hom_dim(picket(2, 2, 3), picket(2, 4, 5)) == 3
    assert hom_dim(picket(2, 4, 5), zero_embedding(2)) == 0
    m2 = load_fixture("m2")
    for m in range(1, 4):
        expect = m2.ambient.dim - linalg.rank(m2.ambient.power(m), 2)
        assert hom_dim(picket(2, 0, m), m2) == expect
    with pytest.raises(PrimeMismatch):
        hom_dim(picket(2, 1, 2), picket(3, 1, 2))


def test_picket_to_picket_closed_form():
    # maps out of a picket are cut out by T^m b = 0 and T^(m-l) b landing in
    # the target sub; on a single block both conditions truncate coordinate
    # ranges, giving dim = min(m, n, m - l + k)
    for m in range(0, 6):
        for ell in range(0, m + 1):
            for n in range(0, 6):
                for k in range(0, n + 1):
                    got = hom_dim(picket(2, ell, m), picket(2, k, n))
                    assert got == min(m, n, m - ell + k), (ell, m, k, n)


def test_hom_matrix_matches_hom_dim():
    for x in (picket(2, 4, 5), load_fixture("m2"), zero_embedding(2)):
        h = hom_matrix(x)
        for ell in range(h.L + 1):
            for m in range(ell, h.M + 1):
                assert h.value(ell, m) == hom_dim(picket(x.prime, ell, m), x)


def test_hom_matrix_invariants():
    for spec in random_corpus(22, 30, 8):
        x = embedding_from_spec(spec, 2)
        h = hom_matrix(x)
        assert h.value(0, 0) == 0
        b1 = x.beta[0] if x.beta else 0
        for ell in range(h.L + 1):
            for m in range(ell + 1, h.M + 1):
                assert h.value(ell, m) >= h.value(ell, m - 1)
                if ell >= 1 and m >= ell:
                    assert h.value(ell, m) >= h.value(ell - 1, m - 1)
            if b1 + ell < h.M:
                assert h.value(ell, h.M) == h.value(ell, h.M - 1)


def test_hom_isomorphism_invariance():
    rng = random.Random(23)
    for spec in random_corpus(24, 10, 8):
        x = embedding_from_spec(spec, 2)
        n = x.ambient.dim
        comm = linalg.solve_commutant(x.ambient.op, x.ambient.op, 2)
        u = None
        for _ in range(100):
            cand = np.zeros((n, n), dtype=np.int64)
            for mtx in comm:
                if rng.random() < 0.5:
                    cand = (cand + mtx) % 2
            if linalg.rank(cand, 2) == n:
                u = cand
                break
        assert u is not None
        moved = Subspace(x.ambient, (x.sub.basis @ u.T) % 2)
        y = Embedding(x.ambient, moved)
        assert hom_matrix(y) == hom_matrix(x)


def test_entries_below():
    m2 = load_fixture("m2")
    assert entries_below(m2, 1, 1) == 2
    assert entries_below(m2, 1, m2.beta[0] + 1) == 0
    assert entries_below(picket(2, 4, 5), 2, 3) == 1
    # agreement with counting boxes in the socle tableau
    for spec in random_corpus(25, 40, 9):
        x = embedding_from_spec(spec, 2)
        t = socle_tableau(x)
        b1 = x.beta[0] if x.beta else 0
        a1 = x.alpha[0] if x.alpha else 0
        for ell in range(1, a1 + 1):
            for r in range(1, b1 + 2):
                want = sum(1 for (row, _c), v in t.entries.items() if v == ell and row >= r)
                assert entries_below(x, ell, r) == want


def test_json_round_trip():
    m2 = load_fixture("m2")
    blob = embedding_to_json(m2)
    again = embedding_from_json(blob)
    assert again.shape == m2.shape
    assert socle_tableau(again) == socle_tableau(m2)
    assert embedding_from_json(blob, prime=3).prime == 3
    with pytest.raises(ValueError):
        embedding_to_json(dual_embedding(m2))  # dual operator is not standard


def test_standardize():
    m2 = load_fixture("m2")
    d = dual_embedding(m2)
    s = standardize(d)
    assert s.shape == d.shape
    assert socle_tableau(s) == socle_tableau(d)
    assert lr_tableau(s) == lr_tableau(d)
    embedding_to_json(s)  # round-trippable once standard


def test_hom_matrix_json():
    h = hom_matrix(load_fixture("m2"))
    blob = json.dumps(h.to_json_dict())
    assert HomMatrix.from_json_dict(json.loads(blob)) == h
