"""Representations of the equi-oriented quiver 1 -> 2 -> ... -> n.

All public indices are 1-based.  An interval module ``U_{i,j}`` is supported on
vertices ``i..j`` with identity maps; ``S_i = U_{i,i}``, ``P_i = U_{i,n}``,
``I_i = U_{1,i}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Mapping, Sequence

from . import linalg
from .errors import NotRealizable, guard

Interval = tuple[int, int]


def intervals(n: int) -> list[Interval]:
    return [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]


def pairs(n: int) -> list[Interval]:
    """Index pairs ``i < j`` in lexicographic order."""
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


@dataclass(frozen=True)
class QuiverContext:
    n: int
    N: int
    e: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "e", tuple(int(x) for x in self.e))
        if self.n < 1 or len(self.e) != self.n:
            raise ValueError(f"need n >= 1 and len(e) == n, got n={self.n}, e={self.e}")
        if self.e[0] < 1 or any(a > b for a, b in zip(self.e, self.e[1:])) or self.e[-1] > self.N:
            raise ValueError(f"e must satisfy 1 <= e_1 <= ... <= e_n <= N, got {self.e}, N={self.N}")

    @property
    def d(self) -> tuple[int, ...]:
        return (self.N,) * self.n

    @property
    def f(self) -> tuple[int, ...]:
        return tuple(self.N - x for x in self.e)

    def ee(self, i: int) -> int:
        """e_i with the conventions e_0 = 0 and e_{n+1} = N."""
        if i == 0:
            return 0
        if i == self.n + 1:
            return self.N
        return self.e[i - 1]

    @property
    def expected_dim(self) -> int:
        return euler_form(self.e, self.f)


@dataclass(frozen=True)
class RepClass:
    """Isomorphism class ``sum m_{i,j} U_{i,j}``; zero multiplicities are dropped."""

    n: int
    m: Mapping[Interval, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (i, j), v in dict(self.m).items():
            if not 1 <= i <= j <= self.n:
                raise ValueError(f"interval ({i},{j}) out of range for n={self.n}")
            if v < 0:
                raise ValueError("multiplicities must be non-negative")
            if v:
                clean[(i, j)] = int(v)
        object.__setattr__(self, "m", dict(sorted(clean.items())))

    def __hash__(self):
        return hash((self.n, tuple(self.m.items())))

    def __eq__(self, other):
        return isinstance(other, RepClass) and self.n == other.n and self.m == other.m

    def __add__(self, other: "RepClass") -> "RepClass":
        if self.n != other.n:
            raise ValueError("direct sum of representations of different quivers")
        m = dict(self.m)
        for k, v in other.m.items():
            m[k] = m.get(k, 0) + v
        return RepClass(self.n, m)

    def __repr__(self):
        if not self.m:
            return f"RepClass(n={self.n}, 0)"
        parts = [f"U{i}{j}" + (f"^{v}" if v > 1 else "") for (i, j), v in self.m.items()]
        return f"RepClass(n={self.n}, {' + '.join(parts)})"

    def get(self, i: int, j: int) -> int:
        return self.m.get((i, j), 0)

    @property
    def dim_vector(self) -> tuple[int, ...]:
        dv = [0] * self.n
        for (i, j), v in self.m.items():
            for x in range(i - 1, j):
                dv[x] += v
        return tuple(dv)

    def summands(self) -> Iterator[Interval]:
        """Indecomposable summands with repetition, in sorted order."""
        for k, v in self.m.items():
            for _ in range(v):
                yield k

    def split_projective(self) -> tuple["RepClass", "RepClass"]:
        """``(P, X)`` with ``P`` the maximal projective summand."""
        proj = {k: v for k, v in self.m.items() if k[1] == self.n}
        rest = {k: v for k, v in self.m.items() if k[1] != self.n}
        return RepClass(self.n, proj), RepClass(self.n, rest)

    def to_json(self) -> dict:
        return {"n": self.n, "m": [[i, j, v] for (i, j), v in self.m.items()]}

    @classmethod
    def from_json(cls, data: Mapping) -> "RepClass":
        return cls(int(data["n"]), {(int(i), int(j)): int(v) for i, j, v in data["m"]})


def indecomposable(n: int, i: int, j: int, mult: int = 1) -> RepClass:
    return RepClass(n, {(i, j): mult})


def simple_sum(n: int) -> RepClass:
    """``S = S_1 + ... + S_n``."""
    return RepClass(n, {(i, i): 1 for i in range(1, n + 1)})


def projective_of_dim(ctx: QuiverContext) -> RepClass:
    """``P^e = sum P_i^{e_i - e_{i-1}}``."""
    return RepClass(ctx.n, {(i, ctx.n): ctx.ee(i) - ctx.ee(i - 1) for i in range(1, ctx.n + 1)})


def injective_of_dim(n: int, s: Sequence[int]) -> RepClass:
    """``I^s = sum I_i^{s_i - s_{i+1}}`` for non-increasing ``s`` (``s_{n+1} = 0``)."""
    s = list(s) + [0]
    if any(a < b for a, b in zip(s, s[1:])):
        raise ValueError("I^s needs a non-increasing dimension vector")
    return RepClass(n, {(1, i): s[i - 1] - s[i] for i in range(1, n + 1)})


@dataclass(frozen=True)
class RankCollection:
    """Ranks ``r_{i,j}`` of the composite maps ``M_i -> M_j`` for ``i < j``.

    ``r_{i,i}`` is the vertex dimension ``d_i``; ``r_{0,j} = r_{i,n+1} = 0``.
    """

    n: int
    d: tuple[int, ...]
    r: Mapping[Interval, int]

    def __post_init__(self):
        object.__setattr__(self, "d", tuple(int(x) for x in self.d))
        if len(self.d) != self.n:
            raise ValueError("dimension vector has the wrong length")
        r = {p: int(self.r[p]) for p in pairs(self.n)}
        object.__setattr__(self, "r", r)

    def __hash__(self):
        return hash((self.n, self.d, tuple(self.r.items())))

    def __eq__(self, other):
        return (
            isinstance(other, RankCollection)
            and self.n == other.n
            and self.d == other.d
            and self.r == other.r
        )

    def __getitem__(self, ij: Interval) -> int:
        i, j = ij
        if i == 0 or j == self.n + 1:
            return 0
        if i == j:
            return self.d[i - 1]
        return self.r[(i, j)]

    def values(self) -> tuple[int, ...]:
        return tuple(self.r[p] for p in pairs(self.n))

    def __ge__(self, other: "RankCollection") -> bool:
        _check_same_shape(self, other)
        return all(self.r[p] >= other.r[p] for p in self.r)

    def __le__(self, other: "RankCollection") -> bool:
        return other >= self

    def __repr__(self):
        body = ", ".join(f"r{i}{j}={v}" for (i, j), v in self.r.items())
        return f"RankCollection(d={self.d}, {body})"

    def to_json(self) -> dict:
        if len(set(self.d)) > 1:
            raise ValueError("JSON encoding assumes d = (N, ..., N)")
        return {
            "n": self.n,
            "N": self.d[0] if self.d else 0,
            "r": [[i, j, v] for (i, j), v in sorted(self.r.items())],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "RankCollection":
        n, N = int(data["n"]), int(data["N"])
        return cls(n, (N,) * n, {(int(i), int(j)): int(v) for i, j, v in data["r"]})


def _check_same_shape(a: RankCollection, b: RankCollection) -> None:
    if a.n != b.n or a.d != b.d:
        raise ValueError("rank collections of different shapes")


@dataclass(frozen=True)
class MatrixRep:
    """A point ``(f_1, ..., f_{n-1})`` of the representation space."""

    maps: tuple  # tuple of linalg matrices
    dims: tuple[int, ...]

    @classmethod
    def from_maps(cls, maps: Sequence, dims: Sequence[int] | None = None) -> "MatrixRep":
        maps = tuple(linalg.matrix(f) for f in maps)
        if dims is None:
            if not maps:
                raise ValueError("dims are required when there are no maps")
            dims = [linalg.shape(maps[0])[1]] + [linalg.shape(f)[0] for f in maps]
        dims = tuple(dims)
        for k, f in enumerate(maps):
            if linalg.shape(f) != (dims[k + 1], dims[k]):
                raise ValueError(f"map f_{k + 1} has shape {linalg.shape(f)}")
        return cls(maps, dims)

    @property
    def n(self) -> int:
        return len(self.dims)

    def composite(self, i: int, j: int):
        """Matrix of ``f_{j-1} o ... o f_i : M_i -> M_j`` (identity when i == j)."""
        out = linalg.identity(self.dims[i - 1])
        for k in range(i, j):
            out = linalg.matmul(self.maps[k - 1], out)
        return out


def euler_form(d: Sequence[int], e: Sequence[int]) -> int:
    if len(d) != len(e):
        raise ValueError("dimension vectors of different lengths")
    n = len(d)
    return sum(d[i] * e[i] for i in range(n)) - sum(d[i] * e[i + 1] for i in range(n - 1))


def hom_indec(a: Interval, b: Interval) -> int:
    """dim Hom(U_a, U_b)."""
    (i, j), (k, l) = a, b
    return int(k <= i <= l <= j)


def ext_indec(a: Interval, b: Interval) -> int:
    """dim Ext^1(U_a, U_b)."""
    (k, l), (i, j) = a, b
    return int(k + 1 <= i <= l + 1 <= j)


def hom_dim(a: RepClass, b: RepClass) -> int:
    return sum(x * y * hom_indec(p, q) for p, x in a.m.items() for q, y in b.m.items())


def ext_dim(a: RepClass, b: RepClass) -> int:
    return sum(x * y * ext_indec(p, q) for p, x in a.m.items() for q, y in b.m.items())


def mult_to_ranks(rep: RepClass) -> RankCollection:
    n = rep.n
    r = {
        (i, j): sum(v for (k, l), v in rep.m.items() if k <= i and j <= l)
        for (i, j) in pairs(n)
    }
    return RankCollection(n, rep.dim_vector, r)


def ranks_to_mult(rc: RankCollection) -> RepClass:
    m = {}
    for i, j in intervals(rc.n):
        v = rc[i, j] - rc[i, j + 1] - rc[i - 1, j] + rc[i - 1, j + 1]
        if v < 0:
            raise NotRealizable(f"m_{{{i},{j}}} = {v} < 0 for {rc}")
        m[(i, j)] = v
    return RepClass(rc.n, m)


def is_realizable(rc: RankCollection) -> bool:
    try:
        ranks_to_mult(rc)
    except NotRealizable:
        return False
    return True


def ranks_of_matrices(rep: MatrixRep) -> RankCollection:
    r = {(i, j): linalg.rank(rep.composite(i, j)) for (i, j) in pairs(rep.n)}
    return RankCollection(rep.n, rep.dims, r)


def deg_leq(m: RankCollection, k: RankCollection) -> bool:
    """``M <=_deg K``: the orbit of K lies in the closure of the orbit of M."""
    return m >= k


def hom_profile(rep: RepClass) -> tuple[int, ...]:
    """``(dim Hom(U, rep))`` over all indecomposables ``U`` in interval order."""
    return tuple(hom_dim(indecomposable(rep.n, i, j), rep) for i, j in intervals(rep.n))


def _compositions(total: int, slots: list) -> Iterator[dict]:
    """Ways to distribute ``total`` over ``slots`` (non-negative parts)."""
    if not slots:
        if total == 0:
            yield {}
        return
    head, rest = slots[0], slots[1:]
    if not rest:
        yield {head: total} if total else {}
        return
    for c in range(total, -1, -1):
        for tail in _compositions(total - c, rest):
            yield ({head: c, **tail} if c else tail)


def iter_classes(n: int, dims: Sequence[int], allowed: Sequence[Interval] | None = None) -> Iterator[RepClass]:
    """All classes with the given dimension vector, built from ``allowed`` intervals.

    Sweeps vertices left to right: at vertex v the intervals starting at v are
    chosen so that the vertex sum is exact.
    """
    allowed = set(intervals(n) if allowed is None else allowed)
    dims = list(dims)
    if any(x < 0 for x in dims):
        return
    starts = {v: [(v, j) for j in range(v, n + 1) if (v, j) in allowed] for v in range(1, n + 1)}

    def rec(v: int, alive: dict[int, int], chosen: dict) -> Iterator[RepClass]:
        if v > n:
            yield RepClass(n, chosen)
            return
        alive = {end: c for end, c in alive.items() if end >= v}
        need = dims[v - 1] - sum(alive.values())
        if need < 0:
            return
        for acc in _compositions(need, starts[v]):
            new_alive = dict(alive)
            for (_, end), c in acc.items():
                new_alive[end] = new_alive.get(end, 0) + c
            if all(
                sum(c for end, c in new_alive.items() if end >= w) <= dims[w - 1]
                for w in range(v + 1, n + 1)
            ):
                yield from rec(v + 1, new_alive, {**chosen, **acc})

    yield from rec(1, {}, {})


def iter_classes_bounded(
    n: int, lo: Sequence[int], hi: Sequence[int], allowed: Sequence[Interval] | None = None
) -> Iterator[RepClass]:
    """All classes whose dimension vector lies in the box ``lo <= dim <= hi``."""
    from itertools import product

    for dv in product(*[range(a, b + 1) for a, b in zip(lo, hi)]):
        yield from iter_classes(n, dv, allowed)


MAX_ORBIT_N = 5
MAX_ORBIT_N_AMBIENT = 8


def enumerate_orbits(ctx: QuiverContext) -> list[RankCollection]:
    """Every orbit of ``R_d`` for ``d = (N, ..., N)``, as sorted rank collections."""
    guard(
        ctx.n <= MAX_ORBIT_N and ctx.N <= MAX_ORBIT_N_AMBIENT,
        f"enumerate_orbits guard: n <= {MAX_ORBIT_N}, N <= {MAX_ORBIT_N_AMBIENT}",
    )
    seen = {mult_to_ranks(rep) for rep in iter_classes(ctx.n, ctx.d)}
    return sorted(seen, key=lambda rc: tuple(-x for x in rc.values()))


def interval_matrices(rep: RepClass) -> MatrixRep:
    """Concrete matrices for ``rep``: at each vertex the basis is the list of
    summands covering it, and arrows act as identity on continuing summands."""
    n = rep.n
    summ = list(rep.summands())
    basis = [[idx for idx, (i, j) in enumerate(summ) if i <= v <= j] for v in range(1, n + 1)]
    maps = []
    for v in range(1, n):
        src, dst = basis[v - 1], basis[v]
        pos = {s: k for k, s in enumerate(dst)}
        f = [[Fraction(0)] * len(src) for _ in dst]
        for c, s in enumerate(src):
            if s in pos:
                f[pos[s]][c] = Fraction(1)
        maps.append(tuple(tuple(row) for row in f))
    return MatrixRep(tuple(maps), tuple(len(b) for b in basis))
