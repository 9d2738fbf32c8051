from itertools import product

import pytest
from hypothesis import given, strategies as st

from flagdeg.errors import GuardExceeded
from flagdeg.loci import LocusLabel, classify, r_star
from flagdeg.orbit_count import (
    bell,
    count_B,
    count_lattice,
    gen_fn_direct,
    gen_fn_product,
    in_polytope,
    lattice_points,
    lattice_to_ranks,
    nonempty_subsets,
    projection_rep,
    projection_sequence,
    ranks_to_lattice,
)
from flagdeg.quiver import QuiverContext, enumerate_orbits, ranks_of_matrices
from flagdeg.series import MultiSeries, geometric


def brute_force_count(caps):
    """Lattice points of Q_e by scanning a bounding box."""
    n1 = len(caps)
    subs = [s for s in nonempty_subsets(range(1, n1 + 1))]
    top = max(caps, default=0)
    total = 0
    for f in product(range(top + 1), repeat=len(subs)):
        if all(sum(v for s, v in zip(subs, f) if i in s) <= caps[i - 1] for i in range(1, n1 + 1)):
            total += 1
    return total


def test_count_examples():
    for e1, e2 in [(1, 1), (1, 4), (2, 9), (3, 3)]:
        assert count_B(QuiverContext(2, 10, (e1, e2))) == e2 - e1 + 1
    assert count_B(QuiverContext(3, 4, (1, 2, 3))) == 5
    assert count_B(QuiverContext(4, 7, (2, 2, 2, 2))) == 1


@pytest.mark.parametrize("caps", [(1, 1), (2, 1), (0, 3), (2, 2), (1, 1, 1), (2, 0, 1), (1, 2, 1)])
def test_count_matches_brute_force(caps):
    assert count_lattice(caps) == brute_force_count(caps)
    assert count_lattice(caps) == len(list(lattice_points(QuiverContext(len(caps) + 1, 20, _e_from_caps(caps)))))


def _e_from_caps(caps):
    e = [1]
    for c in caps:
        e.append(e[-1] + c)
    return tuple(e)


def test_count_guard():
    with pytest.raises(GuardExceeded):
        count_lattice((1,) * 6)
    with pytest.raises(GuardExceeded):
        count_lattice((13,))


@given(st.lists(st.integers(0, 3), min_size=1, max_size=3), st.data())
def test_count_monotone_in_gaps(caps, data):
    i = data.draw(st.integers(0, len(caps) - 1))
    bigger = list(caps)
    bigger[i] += 1
    assert count_lattice(bigger) >= count_lattice(caps)


def test_lattice_to_ranks_examples():
    ctx = QuiverContext(3, 4, (1, 2, 3))
    assert lattice_to_ranks(ctx, {}) == r_star(ctx, 0)
    r = lattice_to_ranks(ctx, {(1, 2): 1})
    assert (r[1, 2], r[2, 3], r[1, 3]) == (3, 3, 3)
    with pytest.raises(ValueError):
        lattice_to_ranks(ctx, {(1,): 1, (1, 2): 1})


def test_image_for_n3():
    ctx = QuiverContext(3, 5, (1, 2, 3))
    images = {lattice_to_ranks(ctx, f) for f in lattice_points(ctx)}
    assert len(images) == count_B(ctx)
    assert all(classify(ctx, r) is LocusLabel.FlatIrreducible for r in images)


def test_projection_sequences_realize_ranks():
    ctx = QuiverContext(4, 7, (1, 3, 4, 6))
    for f in lattice_points(ctx):
        rep = projection_rep(ctx, projection_sequence(ctx, f))
        assert ranks_of_matrices(rep) == lattice_to_ranks(ctx, f)


def test_ranks_to_lattice_examples():
    ctx = QuiverContext(3, 4, (1, 2, 3))
    assert ranks_to_lattice(ctx, r_star(ctx, 0)) == {}
    f = ranks_to_lattice(ctx, r_star(ctx, 1))
    for i in range(1, ctx.n):
        assert sum(v for s, v in f.items() if i in s) == ctx.e[i] - ctx.e[i - 1]
    with pytest.raises(ValueError):
        ranks_to_lattice(ctx, r_star(ctx, 2))


@pytest.mark.parametrize("n,N", [(2, 3), (2, 5), (3, 4), (3, 5), (3, 6), (3, 7)])
def test_bijection_up_to_three_vertices(n, N):
    orbits = enumerate_orbits(QuiverContext(n, N, (1,) * n))
    for e in product(range(1, N), repeat=n):
        if list(e) != sorted(e):
            continue
        ctx = QuiverContext(n, N, e)
        flat_irr = {r for r in orbits if r >= r_star(ctx, 1)}
        points = list(lattice_points(ctx))
        assert len(points) == len(flat_irr) == count_B(ctx)
        for f in points:
            r = lattice_to_ranks(ctx, f)
            assert r in flat_irr
            assert ranks_to_lattice(ctx, r) == f


def test_four_vertex_rank_side_round_trip():
    # every flat-irreducible orbit is hit, and ranks -> lattice -> ranks is the identity
    for N in (5, 6):
        orbits = enumerate_orbits(QuiverContext(4, N, (1,) * 4))
        for e in product(range(1, N), repeat=4):
            if any(a >= b for a, b in zip(e, e[1:])):
                continue
            ctx = QuiverContext(4, N, e)
            for r in orbits:
                if r >= r_star(ctx, 1):
                    assert lattice_to_ranks(ctx, ranks_to_lattice(ctx, r)) == r


def test_four_vertex_collision():
    # two lattice points with the same rank collection: the window-based rank map
    # cannot separate {2} + {1,2,3} from {1,2} + {2,3}
    ctx = QuiverContext(4, 6, (1, 2, 4, 5))
    a = {(2,): 1, (1, 2, 3): 1}
    b = {(1, 2): 1, (2, 3): 1}
    assert in_polytope(ctx, a) and in_polytope(ctx, b)
    assert lattice_to_ranks(ctx, a) == lattice_to_ranks(ctx, b)
    orbits = enumerate_orbits(ctx)
    assert sum(1 for r in orbits if r >= r_star(ctx, 1)) == count_B(ctx) - 1


@pytest.mark.parametrize("e", [(1, 2, 3), (1, 3, 4), (2, 3, 5)])
def test_orbit_count_independent_of_N(e):
    counts = []
    for N in (e[-1] + 1, e[-1] + 2):
        ctx = QuiverContext(3, N, e)
        counts.append(sum(1 for r in enumerate_orbits(ctx) if r >= r_star(ctx, 1)))
    assert counts == [count_B(QuiverContext(3, e[-1] + 1, e))] * 2


def test_series_basics():
    s = geometric((3,), (1,))
    assert [s[(k,)] for k in range(4)] == [1, 1, 1, 1]
    t = geometric((2, 2), (1, 1)) * geometric((2, 2), (1, 0))
    assert t[(2, 1)] == 1 and t[(2, 0)] == 1 and t[(0, 1)] == 0
    assert (s + s)[(2,)] == 2
    with pytest.raises(ValueError):
        s.times_geometric((0,))
    with pytest.raises(ValueError):
        s * geometric((2,), (1,))


@given(st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2)), min_size=1, max_size=4))
def test_times_geometric_matches_product(steps):
    steps = [s for s in steps if any(s)]
    box = (3, 3)
    a = MultiSeries.one(box)
    b = MultiSeries.one(box)
    for s in steps:
        a = a.times_geometric(s)
        b = b * geometric(box, s)
    assert a == b


def test_gen_fn_examples():
    s = gen_fn_product(1, 5)
    assert [s[(k,)] for k in range(6)] == [1] * 6
    s2 = gen_fn_product(2, 5)
    for e1, gap in product(range(6), repeat=2):
        assert s2[(e1, gap)] == gap + 1
    assert gen_fn_product(3, 2)[(1, 1, 1)] == 5
    assert gen_fn_product(4, 1)[(1, 1, 1, 1)] == 15
    assert gen_fn_direct(3, 2)[(0, 0, 0)] == 1


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_gen_fn_direct_equals_product(n):
    assert gen_fn_direct(n, 4) == gen_fn_product(n, 4)
    assert gen_fn_product(n, 4)[(1,) * n] == bell(n)


def test_bell_numbers():
    assert [bell(n) for n in range(1, 8)] == [1, 2, 5, 15, 52, 203, 877]


def test_gen_fn_guard():
    with pytest.raises(GuardExceeded):
        gen_fn_product(6, 2)
    with pytest.raises(GuardExceeded):
        gen_fn_product(2, 7)
