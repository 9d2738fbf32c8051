"""Non-crossing arc diagrams and the components of the maximally flat degeneration."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import guard
from .quiver import QuiverContext, RankCollection, RepClass, mult_to_ranks, pairs

MAX_ARC_N = 12


@dataclass(frozen=True)
class ArcDiagram:
    n: int
    arcs: frozenset

    def __post_init__(self):
        arcs = frozenset((int(i), int(j)) for i, j in self.arcs)
        for i, j in arcs:
            if not 1 <= i < j <= self.n:
                raise ValueError(f"arc ({i},{j}) out of range for n={self.n}")
        object.__setattr__(self, "arcs", arcs)

    def sorted_arcs(self) -> list[tuple[int, int]]:
        return sorted(self.arcs)

    def is_noncrossing(self) -> bool:
        return all(not _cross(a, b) and not _cross(b, a) for a, b in combinations(self.arcs, 2))

    def to_json(self) -> dict:
        return {"n": self.n, "arcs": [list(a) for a in self.sorted_arcs()]}


def _cross(a, b) -> bool:
    (i, j), (k, l) = a, b
    return i <= k < j <= l


def enumerate_noncrossing(n: int) -> list[ArcDiagram]:
    """All non-crossing diagrams on n points, sorted by (size, arcs)."""
    guard(n <= MAX_ARC_N, f"enumerate_noncrossing guard: n <= {MAX_ARC_N}")
    if n < 1:
        raise ValueError("n must be positive")
    out: list[frozenset] = []

    # choose, for each left point, at most one right end; a new arc may not
    # cross an earlier one and may not share a right end
    def rec(start: int, chosen: list):
        if start > n:
            out.append(frozenset(chosen))
            return
        rec(start + 1, chosen)
        for j in range(start + 1, n + 1):
            arc = (start, j)
            if all(not _cross(a, arc) and not _cross(arc, a) for a in chosen):
                chosen.append(arc)
                rec(start + 1, chosen)
                chosen.pop()

    rec(1, [])
    diagrams = [ArcDiagram(n, a) for a in out]
    return sorted(diagrams, key=lambda d: (len(d.arcs), d.sorted_arcs()))


def catalan(n: int) -> int:
    """Catalan numbers by the convolution recurrence."""
    c = [1]
    for k in range(n):
        c.append(sum(c[i] * c[k - i] for i in range(k + 1)))
    return c[n]


def rank_of_diagram(ctx: QuiverContext, a: ArcDiagram) -> dict:
    """r(A)_{i,j} = e_i - #{arcs starting in [1,i] and ending in [i+1,j]}."""
    return {
        (i, j): ctx.e[i - 1] - sum(1 for (s, t) in a.arcs if s <= i < t <= j)
        for (i, j) in pairs(ctx.n)
    }


def c_coefficients(ctx: QuiverContext, a: ArcDiagram) -> tuple[int, ...]:
    ends = [sum(1 for _, t in a.arcs if t == i) for i in range(1, ctx.n + 1)]
    starts = [sum(1 for s, _ in a.arcs if s == i) for i in range(1, ctx.n + 1)]
    return tuple(ctx.ee(i) - ctx.ee(i - 1) + ends[i - 1] - starts[i - 1] for i in range(1, ctx.n + 1))


def rep_Nbar_A(n: int, a: ArcDiagram) -> RepClass:
    m: dict = {}
    for i, j in a.arcs:
        m[(i, j - 1)] = m.get((i, j - 1), 0) + 1
    return RepClass(n, m)


def rep_N_A(ctx: QuiverContext, a: ArcDiagram) -> RepClass:
    c = c_coefficients(ctx, a)
    if any(x < 0 for x in c):
        raise ValueError(f"negative projective multiplicity c={c} for diagram {a.sorted_arcs()}")
    proj = RepClass(ctx.n, {(i, ctx.n): c[i - 1] for i in range(1, ctx.n + 1)})
    return proj + rep_Nbar_A(ctx.n, a)


def ranks_of_N_A(ctx: QuiverContext, a: ArcDiagram) -> RankCollection:
    return mult_to_ranks(rep_N_A(ctx, a))


def mf_components(ctx: QuiverContext) -> list[ArcDiagram]:
    """Index set of the components of the fibre over r^2."""
    return enumerate_noncrossing(ctx.n)
