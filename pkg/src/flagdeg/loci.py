"""The distinguished collections r^0, r^1, r^2, the representations M(a), and the
flat / flat-irreducible classification of orbits."""

from __future__ import annotations

import enum
from typing import Sequence

from .errors import InvariantViolation, NotRealizable
from .quiver import QuiverContext, RankCollection, RepClass, mult_to_ranks, pairs, ranks_to_mult


class LocusLabel(enum.Enum):
    FlatIrreducible = "flat-irreducible"
    FlatReducible = "flat-reducible"
    NonFlat = "non-flat"

    @property
    def rank(self) -> int:
        return {"flat-irreducible": 2, "flat-reducible": 1, "non-flat": 0}[self.value]


def r_star(ctx: QuiverContext, which: int) -> RankCollection:
    """r^0 (all N), r^1 (N - e_j + e_i) or r^2 (N - 1 - e_j + e_i)."""
    if which not in (0, 1, 2):
        raise ValueError("which must be 0, 1 or 2")
    N, e = ctx.N, ctx.e
    if which == 0:
        r = {p: N for p in pairs(ctx.n)}
    else:
        drop = which - 1
        r = {(i, j): N - drop - e[j - 1] + e[i - 1] for (i, j) in pairs(ctx.n)}
    return RankCollection(ctx.n, ctx.d, r)


def rep_M_of_a(ctx: QuiverContext, a: Sequence[int]) -> RepClass:
    n, N = ctx.n, ctx.N
    a = tuple(int(x) for x in a)
    if len(a) != n - 1:
        raise ValueError(f"a must have length n-1 = {n - 1}")
    if any(x < 0 for x in a):
        raise ValueError("a must be non-negative")
    if sum(a) > N:
        raise ValueError(f"sum(a) = {sum(a)} exceeds N = {N}")
    if n == 1:
        return RepClass(1, {(1, 1): N})
    m = {(1, n): N - sum(a)}
    for i in range(1, n):
        m[(1, i)] = m.get((1, i), 0) + a[i - 1]
        m[(i + 1, n)] = m.get((i + 1, n), 0) + a[i - 1]
    return RepClass(n, m)


def ranks_of_a(ctx: QuiverContext, a: Sequence[int]) -> RankCollection:
    """Closed form r_{i,j} = N - sum_{i <= k < j} a_k."""
    r = {(i, j): ctx.N - sum(a[i - 1 : j - 1]) for (i, j) in pairs(ctx.n)}
    return RankCollection(ctx.n, ctx.d, r)


def rep_M1(ctx: QuiverContext) -> RepClass:
    return rep_M_of_a(ctx, [ctx.e[i + 1] - ctx.e[i] for i in range(ctx.n - 1)])


def rep_M2(ctx: QuiverContext) -> RepClass:
    """The representation P^e + S + (I^f / S), whose rank collection is r^2."""
    n, N, ee = ctx.n, ctx.N, ctx.ee
    if ctx.e[-1] >= N:
        raise ValueError("M^2 needs e_n < N")
    if n == 1:
        return RepClass(1, {(1, 1): N})
    m: dict = {}

    def add(k, v):
        m[k] = m.get(k, 0) + v

    add((1, 1), ee(2) - ee(1) + 1)
    add((n, n), ee(n) - ee(n - 1) + 1)
    for i in range(2, n):
        add((1, i), ee(i + 1) - ee(i))
        add((i, n), ee(i) - ee(i - 1))
        add((i, i), 1)
    # fixes the vertex sums; the (1,n) summand collects what is left of P_1 and I_n
    add((1, n), N - 1 - ee(n) + ee(1))
    bad = {k: v for k, v in m.items() if v < 0}
    if bad:
        raise ValueError(f"M^2 recipe gives negative multiplicities {bad}")
    return RepClass(n, m)


def witness_tuple(ctx: QuiverContext, i: int, j: int | None = None) -> tuple[int, ...]:
    """a^i (``j`` omitted) or a^{i,j}."""
    n, ee = ctx.n, ctx.ee
    a = [0] * (n - 1)
    if j is None:
        if not 1 <= i <= n - 1:
            raise ValueError(f"i={i} out of range 1..{n - 1}")
        a[i - 1] = ee(i + 1) - ee(i) + 1
    else:
        if not 1 <= i < j <= n:
            raise ValueError(f"(i,j)=({i},{j}) out of range")
        if j == i + 1:
            a[i - 1] = ee(i + 1) - ee(i) + 2
        else:
            a[i - 1] = ee(i + 1) - ee(i) + 1
            a[j - 2] = ee(j) - ee(j - 1) + 1
    if sum(a) > ctx.N:
        raise ValueError(f"witness tuple {tuple(a)} has sum exceeding N={ctx.N}")
    return tuple(a)


def classify(ctx: QuiverContext, r: RankCollection) -> LocusLabel:
    ranks_to_mult(r)  # raises NotRealizable
    if r >= r_star(ctx, 1):
        return LocusLabel.FlatIrreducible
    if r >= r_star(ctx, 2):
        return LocusLabel.FlatReducible
    return LocusLabel.NonFlat


def dominating_witness(ctx: QuiverContext, r: RankCollection):
    """A witness ``("single", i)`` or ``("pair", i, j)`` whose M(a) degenerates to r.

    Returns None on the flat-irreducible locus.  Raises InvariantViolation when
    no witness exists although one must.
    """
    label = classify(ctx, r)
    if label is LocusLabel.FlatIrreducible:
        return None
    if label is LocusLabel.FlatReducible:
        for i in range(1, ctx.n):
            try:
                a = witness_tuple(ctx, i)
            except ValueError:
                continue
            if ranks_of_a(ctx, a) >= r:
                return ("single", i)
    else:
        for i, j in pairs(ctx.n):
            try:
                a = witness_tuple(ctx, i, j)
            except ValueError:
                continue
            if ranks_of_a(ctx, a) >= r:
                return ("pair", i, j)
    raise InvariantViolation(f"no witness for {label.value} orbit {r} (n={ctx.n}, N={ctx.N}, e={ctx.e})")


__all__ = [
    "LocusLabel",
    "NotRealizable",
    "classify",
    "r_star",
    "ranks_of_a",
    "rep_M1",
    "rep_M2",
    "rep_M_of_a",
    "dominating_witness",
    "witness_tuple",
]
