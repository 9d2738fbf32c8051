"""Orbits in the flat-irreducible locus as lattice points of the polytope Q_e,
and the product formula for their generating function."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterator, Mapping, Sequence

from . import linalg
from .errors import guard
from .loci import r_star
from .quiver import MatrixRep, QuiverContext, RankCollection, pairs, ranks_to_mult
from .series import MultiSeries

Subset = tuple[int, ...]

MAX_COUNT_N = 6
MAX_GAP = 12
MAX_GF_N = 5
MAX_GF_TRUNC = 6


def nonempty_subsets(ground: Sequence[int]) -> list[Subset]:
    """Non-empty subsets of ``ground``, by size then lexicographically."""
    ground = sorted(ground)
    return [c for k in range(1, len(ground) + 1) for c in combinations(ground, k)]


def gaps(ctx: QuiverContext) -> tuple[int, ...]:
    """Capacities e_{i+1} - e_i for i = 1..n-1."""
    return tuple(ctx.e[i + 1] - ctx.e[i] for i in range(ctx.n - 1))


def _check_gaps(caps: Sequence[int]) -> None:
    guard(
        len(caps) + 1 <= MAX_COUNT_N and all(c <= MAX_GAP for c in caps),
        f"lattice guard: n <= {MAX_COUNT_N}, gaps <= {MAX_GAP}",
    )
    if any(c < 0 for c in caps):
        raise ValueError("capacities must be non-negative")


def count_lattice(caps: Sequence[int]) -> int:
    """Number of lattice points of Q_e given the gaps e_{i+1} - e_i."""
    caps = tuple(int(c) for c in caps)
    _check_gaps(caps)
    subs = nonempty_subsets(range(1, len(caps) + 1))

    @lru_cache(maxsize=None)
    def rec(idx: int, left: tuple) -> int:
        if idx == len(subs):
            return 1
        sub = subs[idx]
        top = min(left[i - 1] for i in sub)
        total = 0
        for v in range(top + 1):
            nxt = list(left)
            for i in sub:
                nxt[i - 1] -= v
            total += rec(idx + 1, tuple(nxt))
        return total

    return rec(0, caps)


def count_B(ctx: QuiverContext) -> int:
    return count_lattice(gaps(ctx))


def lattice_points(ctx: QuiverContext) -> Iterator[dict[Subset, int]]:
    """All points of Q_e as sparse maps ``{I: f_I}``."""
    caps = gaps(ctx)
    _check_gaps(caps)
    subs = nonempty_subsets(range(1, ctx.n))

    def rec(idx: int, left: list, acc: dict):
        if idx == len(subs):
            yield dict(acc)
            return
        sub = subs[idx]
        top = min(left[i - 1] for i in sub)
        for v in range(top + 1):
            for i in sub:
                left[i - 1] -= v
            if v:
                acc[sub] = v
            yield from rec(idx + 1, left, acc)
            acc.pop(sub, None)
            for i in sub:
                left[i - 1] += v

    yield from rec(0, list(caps), {})


def in_polytope(ctx: QuiverContext, f: Mapping) -> bool:
    caps = gaps(ctx)
    for sub, v in f.items():
        if not sub or any(not 1 <= i <= ctx.n - 1 for i in sub) or v < 0:
            return False
    return all(sum(v for sub, v in f.items() if i in sub) <= caps[i - 1] for i in range(1, ctx.n))


def lattice_to_ranks(ctx: QuiverContext, f: Mapping) -> RankCollection:
    """r_{i,j}(f) = N - sum of f_I over I meeting the arrow window [i, j-1]."""
    f = {tuple(sorted(k)): int(v) for k, v in f.items() if v}
    if not in_polytope(ctx, f):
        raise ValueError(f"{f} is not a lattice point of Q_e")
    r = {
        (i, j): ctx.N - sum(v for sub, v in f.items() if any(i <= s <= j - 1 for s in sub))
        for (i, j) in pairs(ctx.n)
    }
    return RankCollection(ctx.n, ctx.d, r)


def projection_sequence(ctx: QuiverContext, f: Mapping) -> list[frozenset]:
    """Kill-sets J_1..J_{n-1}: coordinates 1, 2, ... are handed out to the sets
    I with f_I > 0 in sorted order, and coordinate k lies in J_s iff s is in L_k."""
    cut_sets: list[Subset] = []
    for sub in sorted(f, key=lambda s: (len(s), s)):
        cut_sets += [tuple(sub)] * int(f[sub])
    if len(cut_sets) > ctx.N:
        raise ValueError("more cut coordinates than N")
    return [frozenset(k + 1 for k, cuts in enumerate(cut_sets) if s in cuts) for s in range(1, ctx.n)]


def projection_rep(ctx: QuiverContext, kill_sets: Sequence) -> MatrixRep:
    """The point (pr_{J_1}, ..., pr_{J_{n-1}}), pr_J the coordinate projection killing J."""
    N = ctx.N
    maps = []
    for kill in kill_sets:
        maps.append(linalg.matrix([[int(p == q and (p + 1) not in kill) for q in range(N)] for p in range(N)]))
    return MatrixRep.from_maps(maps, (N,) * ctx.n)


def ranks_to_lattice(ctx: QuiverContext, r: RankCollection) -> dict[Subset, int]:
    """Read off f from a projection-sequence representative of r.

    The interval summands are glued into N chains covering [1, n]; chain k
    is cut after vertex s exactly when s is in L_k.  Chains are matched
    deterministically: those ending at s, in creation order, take the
    intervals starting at s+1 in order of increasing right end.
    """
    if not r >= r_star(ctx, 1):
        raise ValueError("rank collection is not in the flat-irreducible locus")
    m = ranks_to_mult(r)
    n = ctx.n
    by_start: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
    for (i, j), mult in m.m.items():
        by_start[i] += [j] * mult
    chains: list[list[int]] = [[j] for j in sorted(by_start[1])]
    for s in range(1, n):
        waiting = [c for c in chains if c[-1] == s]
        starting = sorted(by_start[s + 1])
        if len(waiting) != len(starting):
            raise ValueError("interval multiplicities do not glue into chains")
        for c, j in zip(waiting, starting):
            c.append(j)
    f: dict[Subset, int] = {}
    for c in chains:
        cuts = tuple(x for x in c if x < n)
        if cuts:
            f[cuts] = f.get(cuts, 0) + 1
    return dict(sorted(f.items(), key=lambda kv: (len(kv[0]), kv[0])))


def gen_fn_product(n: int, trunc: int | Sequence[int]) -> MultiSeries:
    box = _box(n, trunc)
    s = MultiSeries.one(box)
    for i in range(n):
        s = s.times_geometric(tuple(int(k == i) for k in range(n)))
    for sub in nonempty_subsets(range(2, n + 1)):
        s = s.times_geometric(tuple(int(k + 1 in sub) for k in range(n)))
    return s


def gen_fn_direct(n: int, trunc: int | Sequence[int]) -> MultiSeries:
    """Sum of count_B x^ebar over the box; ebar_1 = e_1, ebar_i = e_i - e_{i-1}."""
    box = _box(n, trunc)
    coeffs = {}
    skeleton = MultiSeries.one(box)
    for ebar in skeleton.box():
        coeffs[ebar] = count_lattice(ebar[1:])
    return MultiSeries(box, coeffs)


def _box(n: int, trunc) -> tuple[int, ...]:
    box = (int(trunc),) * n if isinstance(trunc, int) else tuple(int(t) for t in trunc)
    if n < 1 or len(box) != n:
        raise ValueError("truncation must match n")
    guard(n <= MAX_GF_N and max(box) <= MAX_GF_TRUNC, f"genfn guard: n <= {MAX_GF_N}, truncation <= {MAX_GF_TRUNC}")
    return box


def bell(n: int) -> int:
    """Bell numbers via the Bell triangle."""
    row = [1]
    for _ in range(n - 1):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[-1]
