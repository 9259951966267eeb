import numpy as np
import pytest

from fixtures import DUAL_LR_M2, SOCLE_M1, SOCLE_M2
from soctab import linalg
from soctab.embeddings import lr_tableau, picket, socle_tableau
from soctab.modules import module_type
from soctab.partitions import partitions_of, subdiagrams, transpose, weight
from soctab.realize import (
    EpiChain,
    build_chain,
    realize_lr,
    realize_socle,
    verify_epi_chain,
)
from soctab.tableaux import InvalidTableau, SkewTableau, iter_tableaux


def test_build_chain_shape():
    epi = build_chain(SOCLE_M2, 2)
    assert [c.dim for c in epi.stages] == [10, 8, 6, 5, 4]
    assert [module_type(c) for c in epi.stages] == [
        (5, 3, 2), (4, 2, 2), (3, 2, 1), (3, 1, 1), (3, 1),
    ]
    # kernel lengths along the chain are the entry counts
    for f, want in zip(epi.maps, transpose((4, 2))):
        assert f.shape[1] - linalg.rank(f, 2) == want
    assert verify_epi_chain(epi, (4, 2)) == []


def test_single_column_chain():
    col = socle_tableau(picket(2, 4, 5))
    epi = build_chain(col, 2)
    assert [c.dim for c in epi.stages] == [5, 4, 3, 2, 1]
    # every map is the canonical surjection; no correction blocks appear
    for f in epi.maps:
        rows, cols = f.shape
        assert np.array_equal(f, np.eye(rows, cols, dtype=np.int64))
    assert verify_epi_chain(epi, (4,)) == []


def test_empty_chain():
    t = SkewTableau((), (3, 1), (3, 1), {})
    epi = build_chain(t, 2)
    assert len(epi.maps) == 0
    assert verify_epi_chain(epi) == []
    x = realize_socle(t, 2)
    assert x.sub.dim == 0
    assert x.shape == ((), (3, 1), (3, 1))


def test_uncorrected_chain_reports_violations():
    epi = build_chain(SOCLE_M2, 2, with_corrections=False)
    problems = verify_epi_chain(epi, (4, 2))
    assert any("socle condition" in p for p in problems)


def test_realize_fixtures():
    for t in (SOCLE_M2, SOCLE_M1):
        for p in (2, 3):
            x = realize_socle(t, p)
            assert x.shape == ((4, 2), (5, 3, 2), (3, 1))
            assert socle_tableau(x) == t
    y = realize_socle(socle_tableau(picket(2, 4, 5)), 2)
    assert socle_tableau(y) == socle_tableau(picket(2, 4, 5))
    assert lr_tableau(y) == lr_tableau(picket(2, 4, 5))


def test_realize_rejects_invalid():
    bad = dict(SOCLE_M2.entries)
    bad[(4, 1)], bad[(5, 1)] = 1, 2
    t = SkewTableau((4, 2), (5, 3, 2), (3, 1), bad)
    with pytest.raises(InvalidTableau):
        realize_socle(t, 2)


def test_realize_dimensions():
    x = realize_socle(SOCLE_M2, 2)
    assert x.sub.dim == weight((4, 2))
    assert x.gamma == (3, 1)


def test_realize_lr():
    w = realize_lr(DUAL_LR_M2, 2)
    assert lr_tableau(w) == DUAL_LR_M2
    assert w.shape == ((3, 1), (5, 3, 2), (4, 2))
    g45 = lr_tableau(picket(2, 4, 5))
    v = realize_lr(g45, 2)
    assert lr_tableau(v) == g45
    assert socle_tableau(v) == socle_tableau(picket(2, 4, 5))
    empty = SkewTableau((), (2, 1), (2, 1), {})
    z = realize_lr(empty, 2)
    assert z.sub.dim == 0


def test_exhaustive_round_trip_small():
    for wgt in range(0, 8):
        for beta in partitions_of(wgt):
            for gamma in subdiagrams(beta):
                for alpha in partitions_of(weight(beta) - weight(gamma)):
                    for t in iter_tableaux(alpha, beta, gamma, kind="socle"):
                        x = realize_socle(t, 2)
                        assert socle_tableau(x) == t
                        assert x.shape == (alpha, beta, gamma)
                    for t in iter_tableaux(alpha, beta, gamma, kind="lr"):
                        assert lr_tableau(realize_lr(t, 2)) == t


def test_verify_rejects_bad_chains():
    from soctab.modules import standard_module

    # kernel of the zero map out of a length-2 block is not semisimple
    chain = EpiChain(
        2,
        [standard_module(2, (2,)), standard_module(2, ())],
        [np.zeros((0, 2), dtype=np.int64)],
    )
    assert any("not semisimple" in p for p in verify_epi_chain(chain))
    # a non-surjective stage map
    chain = EpiChain(
        2,
        [standard_module(2, (1,)), standard_module(2, (1,))],
        [np.zeros((1, 1), dtype=np.int64)],
    )
    assert any("not surjective" in p for p in verify_epi_chain(chain))
