import random
from itertools import product

import pytest
from hypothesis import assume, given, strategies as st

from flagdeg import linalg
from flagdeg.errors import GuardExceeded, NotRealizable
from flagdeg.loci import r_star
from flagdeg.quiver import (
    MatrixRep,
    QuiverContext,
    RankCollection,
    RepClass,
    deg_leq,
    enumerate_orbits,
    euler_form,
    ext_dim,
    hom_dim,
    hom_profile,
    indecomposable,
    injective_of_dim,
    interval_matrices,
    iter_classes,
    mult_to_ranks,
    pairs,
    ranks_of_matrices,
    ranks_to_mult,
)
from conftest import rep_classes, rep_pairs


def U(n, i, j):
    return indecomposable(n, i, j)


def test_context_validation():
    with pytest.raises(ValueError):
        QuiverContext(3, 4, (2, 1, 3))
    with pytest.raises(ValueError):
        QuiverContext(2, 4, (0, 1))
    with pytest.raises(ValueError):
        QuiverContext(2, 4, (1, 5))
    ctx = QuiverContext(3, 4, (1, 2, 3))
    assert ctx.ee(0) == 0 and ctx.ee(4) == 4 and ctx.f == (3, 2, 1)


def test_euler_form_examples():
    assert euler_form((1, 1), (1, 1)) == 1
    assert euler_form((1, 2, 3), (3, 2, 1)) == 6
    assert euler_form((4, 4, 4), (0, 0, 0)) == 0
    with pytest.raises(ValueError):
        euler_form((1, 2), (1,))


def test_hom_examples():
    assert hom_dim(U(3, 2, 3), U(3, 1, 2)) == 1
    assert hom_dim(U(3, 1, 2), U(3, 2, 3)) == 0
    m = U(3, 1, 3) + U(3, 2, 3)
    assert hom_dim(m, m) == 3


def test_ext_examples():
    assert ext_dim(U(3, 1, 1), U(3, 2, 2)) == 1
    s = RepClass(3, {(1, 1): 1, (2, 2): 1, (3, 3): 1})
    assert ext_dim(s, s) == 2
    inj = injective_of_dim(3, (3, 2, 1))
    for x in iter_classes(3, (1, 2, 1)):
        assert ext_dim(x, inj) == 0


@given(rep_pairs())
def test_euler_identity(pair):
    a, b = pair
    assert hom_dim(a, b) - ext_dim(a, b) == euler_form(a.dim_vector, b.dim_vector)


def test_mult_to_ranks_examples():
    assert set(mult_to_ranks(RepClass(3, {(1, 3): 4})).values()) == {4}
    m1 = RepClass(3, {(1, 1): 1, (1, 2): 1, (1, 3): 2, (2, 3): 1, (3, 3): 1})
    r = mult_to_ranks(m1)
    assert (r[1, 2], r[1, 3], r[2, 3]) == (3, 2, 3)
    assert r == r_star(QuiverContext(3, 4, (1, 2, 3)), 1)
    assert set(mult_to_ranks(U(3, 2, 2)).values()) == {0}


def test_ranks_to_mult_examples():
    assert ranks_to_mult(RankCollection(2, (2, 2), {(1, 2): 2})) == RepClass(2, {(1, 2): 2})
    with pytest.raises(NotRealizable):
        ranks_to_mult(RankCollection(3, (1, 1, 1), {(1, 2): 1, (2, 3): 1, (1, 3): 0}))


@given(rep_classes())
def test_round_trip(m):
    assert ranks_to_mult(mult_to_ranks(m)) == m


@given(rep_classes(max_n=6, max_mult=3))
def test_recin_inequality(m):
    r = mult_to_ranks(m)
    n = m.n
    for i, j, k, l in product(range(1, n + 1), repeat=4):
        if i < j <= k < l:
            assert r[i, l] + r[j, k] >= r[i, k] + r[j, l]


@given(rep_classes())
def test_rank_bounds_and_monotonicity(m):
    r = mult_to_ranks(m)
    d = m.dim_vector
    for i, j in pairs(m.n):
        assert 0 <= r[i, j] <= min(d[i - 1], d[j - 1])
        if j < m.n:
            assert r[i, j] >= r[i, j + 1]
        if i > 1:
            assert r[i, j] >= r[i - 1, j]


def test_ranks_of_matrices_examples():
    ident = linalg.identity(4)
    assert set(ranks_of_matrices(MatrixRep.from_maps([ident, ident])).values()) == {4}

    def pr(kill):
        return linalg.matrix([[int(p == q and p + 1 not in kill) for q in range(4)] for p in range(4)])

    r = ranks_of_matrices(MatrixRep.from_maps([pr({1, 2}), pr({2, 3})]))
    assert (r[1, 2], r[2, 3], r[1, 3]) == (2, 2, 1)
    rng = random.Random(3)
    upper = [
        linalg.matrix([[rng.randint(1, 5) if p == q else (rng.randint(-3, 3) if q > p else 0) for q in range(4)] for p in range(4)])
        for _ in range(3)
    ]
    assert set(ranks_of_matrices(MatrixRep.from_maps(upper)).values()) == {4}


def _random_invertible(size, rng):
    while True:
        m = linalg.matrix([[rng.randint(-4, 4) for _ in range(size)] for _ in range(size)])
        if linalg.det(m):
            return m


@given(rep_classes(max_n=4), st.integers(0, 10**6))
def test_ranks_invariant_under_base_change(m, seed):
    assume(all(m.dim_vector))
    rep = interval_matrices(m)
    assert ranks_of_matrices(rep) == mult_to_ranks(m)
    rng = random.Random(seed)
    g = [_random_invertible(d, rng) for d in m.dim_vector]
    maps = []
    for i, f in enumerate(rep.maps):
        maps.append(linalg.matmul(linalg.matmul(g[i + 1], f), linalg.inverse(g[i])))
    assert ranks_of_matrices(MatrixRep.from_maps(maps, m.dim_vector)) == mult_to_ranks(m)


def test_deg_leq_examples():
    ctx = QuiverContext(3, 4, (1, 2, 3))
    r0, r1, r2 = (r_star(ctx, k) for k in range(3))
    assert deg_leq(r0, r1) and deg_leq(r1, r2) and not deg_leq(r2, r1)
    with pytest.raises(ValueError):
        deg_leq(r0, r_star(QuiverContext(3, 5, (1, 2, 3)), 0))


def test_enumerate_orbits_examples():
    assert len(enumerate_orbits(QuiverContext(1, 3, (1,)))) == 1
    orbits = enumerate_orbits(QuiverContext(2, 2, (1, 1)))
    assert sorted(r[1, 2] for r in orbits) == [0, 1, 2]
    for r in enumerate_orbits(QuiverContext(3, 4, (1, 2, 3))):
        ranks_to_mult(r)
    with pytest.raises(GuardExceeded):
        enumerate_orbits(QuiverContext(6, 2, (1,) * 6))


def test_orbit_count_matches_brute_force():
    # independent count: all multiplicity tuples with vertex sums N, deduplicated by ranks
    n, N = 3, 3
    ivs = [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
    seen = set()
    for mult in product(range(N + 1), repeat=len(ivs)):
        m = dict(zip(ivs, mult))
        if all(sum(v for (i, j), v in m.items() if i <= x <= j) == N for x in range(1, n + 1)):
            seen.add(tuple(sum(v for (k, l), v in m.items() if k <= i and j <= l) for i, j in pairs(n)))
    assert len(enumerate_orbits(QuiverContext(n, N, (1, 2, 3)))) == len(seen)


@pytest.mark.parametrize("d", [(2, 2), (2, 1, 2), (2, 2, 2), (1, 2, 2, 1)])
def test_degeneration_order_matches_hom_order(d):
    classes = list(iter_classes(len(d), d))
    for a, b in product(classes, repeat=2):
        by_rank = deg_leq(mult_to_ranks(a), mult_to_ranks(b))
        by_hom = all(x <= y for x, y in zip(hom_profile(a), hom_profile(b)))
        assert by_rank == by_hom


def test_json_round_trip():
    m = RepClass(3, {(1, 2): 2, (3, 3): 1})
    assert RepClass.from_json(m.to_json()) == m
    assert m.to_json() == {"n": 3, "m": [[1, 2, 2], [3, 3, 1]]}
    r = r_star(QuiverContext(3, 4, (1, 2, 3)), 1)
    assert RankCollection.from_json(r.to_json()) == r
    assert r.to_json() == {"n": 3, "N": 4, "r": [[1, 2, 3], [1, 3, 2], [2, 3, 3]]}
