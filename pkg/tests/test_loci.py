import random

import pytest
from hypothesis import given, strategies as st

from flagdeg.errors import NotRealizable
from flagdeg.loci import (
    LocusLabel,
    classify,
    r_star,
    ranks_of_a,
    rep_M1,
    rep_M2,
    rep_M_of_a,
    dominating_witness,
    witness_tuple,
)
from flagdeg.quiver import QuiverContext, RankCollection, RepClass, enumerate_orbits, mult_to_ranks, pairs

CTX = QuiverContext(3, 4, (1, 2, 3))


@st.composite
def contexts(draw, max_n=5, max_N=8, strict_top=True):
    n = draw(st.integers(1, max_n))
    N = draw(st.integers(n + 1 if strict_top else n, max_N))
    e = sorted(draw(st.lists(st.integers(1, N - 1 if strict_top else N), min_size=n, max_size=n)))
    return QuiverContext(n, N, tuple(e))


def test_r_star_examples():
    r1 = r_star(CTX, 1)
    assert (r1[1, 2], r1[1, 3], r1[2, 3]) == (3, 2, 3)
    assert set(r_star(CTX, 0).values()) == {4}
    assert r_star(CTX, 2).values() == tuple(x - 1 for x in r1.values())


def test_rep_M_of_a_examples():
    assert rep_M_of_a(CTX, (0, 0)) == RepClass(3, {(1, 3): 4})
    m = rep_M_of_a(CTX, (1, 1))
    assert m == RepClass(3, {(1, 1): 1, (1, 2): 1, (2, 3): 1, (3, 3): 1, (1, 3): 2})
    assert m == rep_M1(CTX)
    with pytest.raises(ValueError):
        rep_M_of_a(CTX, (3, 2))


@given(contexts(), st.data())
def test_M_of_a_rank_formula(ctx, data):
    a = data.draw(st.lists(st.integers(0, ctx.N), min_size=ctx.n - 1, max_size=ctx.n - 1))
    if sum(a) > ctx.N:
        with pytest.raises(ValueError):
            rep_M_of_a(ctx, a)
        return
    r = mult_to_ranks(rep_M_of_a(ctx, a))
    for i, j in pairs(ctx.n):
        assert r[i, j] == ctx.N - sum(a[k - 1] for k in range(i, j))
    assert r == ranks_of_a(ctx, a)


def test_rep_M2_example():
    m2 = rep_M2(CTX)
    assert m2 == RepClass(3, {(1, 1): 2, (3, 3): 2, (1, 2): 1, (2, 3): 1, (2, 2): 1, (1, 3): 1})
    assert mult_to_ranks(m2).values() == (2, 1, 2)


@given(contexts())
def test_M2_realizes_r2(ctx):
    m2 = rep_M2(ctx)
    assert m2.dim_vector == ctx.d
    assert mult_to_ranks(m2) == r_star(ctx, 2)
    assert mult_to_ranks(rep_M1(ctx)) == r_star(ctx, 1)


def test_rep_M2_needs_room():
    with pytest.raises(ValueError):
        rep_M2(QuiverContext(2, 3, (1, 3)))


def test_witness_tuples():
    assert witness_tuple(CTX, 1) == (2, 0)
    assert witness_tuple(CTX, 1, 2) == (3, 0)
    assert witness_tuple(QuiverContext(4, 5, (1, 2, 3, 4)), 1, 3) == (2, 2, 0)
    with pytest.raises(ValueError):
        witness_tuple(CTX, 3)
    with pytest.raises(ValueError):
        witness_tuple(CTX, 2, 2)


def test_classify_examples():
    assert classify(CTX, r_star(CTX, 1)) is LocusLabel.FlatIrreducible
    assert classify(CTX, r_star(CTX, 0)) is LocusLabel.FlatIrreducible
    assert classify(CTX, r_star(CTX, 2)) is LocusLabel.FlatReducible
    assert classify(CTX, ranks_of_a(CTX, witness_tuple(CTX, 1))) is LocusLabel.FlatReducible
    assert classify(CTX, ranks_of_a(CTX, witness_tuple(CTX, 1, 2))) is LocusLabel.NonFlat
    with pytest.raises(NotRealizable):
        classify(QuiverContext(3, 1, (1, 1, 1)), RankCollection(3, (1, 1, 1), {(1, 2): 1, (2, 3): 1, (1, 3): 0}))


def test_witness_examples():
    assert dominating_witness(CTX, r_star(CTX, 2)) == ("single", 1)
    assert dominating_witness(CTX, r_star(CTX, 1)) is None


def test_witness_exhaustive():
    for r in enumerate_orbits(CTX):
        w = dominating_witness(CTX, r)
        label = classify(CTX, r)
        assert (w is None) == (label is LocusLabel.FlatIrreducible)
        if w is not None:
            assert ranks_of_a(CTX, witness_tuple(CTX, *w[1:])) >= r
            assert w[0] == ("single" if label is LocusLabel.FlatReducible else "pair")


def test_classify_monotone():
    ctx = QuiverContext(3, 5, (1, 3, 4))
    orbits = enumerate_orbits(ctx)
    labels = {r: classify(ctx, r).rank for r in orbits}
    rng = random.Random(0)
    for _ in range(400):
        a, b = rng.choice(orbits), rng.choice(orbits)
        if a >= b:
            assert labels[a] >= labels[b]


def test_weak_dimension_vectors():
    ctx = QuiverContext(3, 4, (1, 1, 3))
    assert classify(ctx, r_star(ctx, 1)) is LocusLabel.FlatIrreducible
    assert mult_to_ranks(rep_M2(ctx)) == r_star(ctx, 2)
