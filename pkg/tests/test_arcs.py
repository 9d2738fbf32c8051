from itertools import combinations

import pytest

from flagdeg.arcs import (
    ArcDiagram,
    c_coefficients,
    catalan,
    enumerate_noncrossing,
    mf_components,
    rank_of_diagram,
    ranks_of_N_A,
    rep_N_A,
    rep_Nbar_A,
)
from flagdeg.errors import GuardExceeded
from flagdeg.loci import rep_M2
from flagdeg.quiver import QuiverContext, RepClass
from flagdeg.strata import tc_criterion

CTX = QuiverContext(3, 4, (1, 2, 3))


def brute_force_noncrossing(n):
    """Subsets of arcs with no i <= k < j <= l among distinct arcs."""
    arcs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    out = []
    for size in range(len(arcs) + 1):
        for subset in combinations(arcs, size):
            if all(not (i <= k < j <= l) and not (k <= i < l <= j) for (i, j), (k, l) in combinations(subset, 2)):
                out.append(frozenset(subset))
    return out


def test_examples():
    assert [d.sorted_arcs() for d in enumerate_noncrossing(2)] == [[], [(1, 2)]]
    assert {frozenset(d.arcs) for d in enumerate_noncrossing(3)} == {
        frozenset(),
        frozenset({(1, 2)}),
        frozenset({(2, 3)}),
        frozenset({(1, 3)}),
        frozenset({(1, 2), (2, 3)}),
    }
    assert len(enumerate_noncrossing(4)) == 14


@pytest.mark.parametrize("n", range(1, 11))
def test_catalan_counts(n):
    assert len(enumerate_noncrossing(n)) == catalan(n)


@pytest.mark.parametrize("n", range(1, 7))
def test_enumeration_matches_brute_force(n):
    assert {frozenset(d.arcs) for d in enumerate_noncrossing(n)} == set(brute_force_noncrossing(n))


def test_noncrossing_predicate():
    assert not ArcDiagram(4, frozenset({(1, 3), (2, 4)})).is_noncrossing()
    assert not ArcDiagram(3, frozenset({(1, 2), (1, 3)})).is_noncrossing()
    assert ArcDiagram(4, frozenset({(1, 4), (2, 3)})).is_noncrossing()
    with pytest.raises(ValueError):
        ArcDiagram(3, frozenset({(2, 2)}))
    with pytest.raises(GuardExceeded):
        enumerate_noncrossing(13)


def test_rank_examples():
    assert rank_of_diagram(CTX, ArcDiagram(3, frozenset())) == {(1, 2): 1, (1, 3): 1, (2, 3): 2}
    assert rank_of_diagram(CTX, ArcDiagram(3, frozenset({(1, 3)}))) == {(1, 2): 1, (1, 3): 0, (2, 3): 1}
    assert rank_of_diagram(CTX, ArcDiagram(3, frozenset({(1, 2), (2, 3)}))) == {(1, 2): 0, (1, 3): 0, (2, 3): 1}


def test_N_A_examples():
    empty = ArcDiagram(3, frozenset())
    assert rep_N_A(CTX, empty) == RepClass(3, {(1, 3): 1, (2, 3): 1, (3, 3): 1})
    a = ArcDiagram(3, frozenset({(1, 2)}))
    assert rep_Nbar_A(3, a) == RepClass(3, {(1, 1): 1})
    assert c_coefficients(CTX, a) == (0, 2, 1)


def test_negative_c_rejected():
    ctx = QuiverContext(3, 4, (1, 1, 3))
    with pytest.raises(ValueError):
        rep_N_A(ctx, ArcDiagram(3, frozenset({(2, 3)})))


@pytest.mark.parametrize("n", range(2, 7))
def test_rank_of_diagram_injective(n):
    ctx = QuiverContext(n, n + 1, tuple(range(1, n + 1)))
    ranks = [tuple(sorted(rank_of_diagram(ctx, d).items())) for d in enumerate_noncrossing(n)]
    assert len(set(ranks)) == len(ranks)


@pytest.mark.parametrize("n", range(2, 7))
def test_rank_of_diagram_is_rank_of_N_A(n):
    ctx = QuiverContext(n, n + 1, tuple(range(1, n + 1)))
    for d in enumerate_noncrossing(n):
        nr = ranks_of_N_A(ctx, d)
        assert rep_N_A(ctx, d).dim_vector == ctx.e
        assert dict(nr.r) == rank_of_diagram(ctx, d)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_components_match_equality_classes(n):
    ctx = QuiverContext(n, n + 1, tuple(range(1, n + 1)))
    comps = mf_components(ctx)
    assert len(comps) == catalan(n)
    classes = tc_criterion(ctx, rep_M2(ctx)).equality_classes
    assert sorted(classes, key=repr) == sorted((rep_Nbar_A(n, d) for d in comps), key=repr)
