"""Degenerate Plücker relations, PBW semi-standard tableaux, straightening and
multigraded dimensions of the homogeneous coordinate rings."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

from . import linalg
from .errors import InvariantViolation, guard
from .loci import LocusLabel, classify, r_star
from .quiver import MatrixRep, QuiverContext, RankCollection, pairs, ranks_of_matrices
from .slice import SliceParams, slice_maps

Var = tuple  # increasing tuple of 1-based indices: the coordinate X_S
Mono = tuple  # tuple of Vars sorted by (length, entries)


def _vkey(v: Var):
    return (len(v), v)


def make_mono(vars_: Iterable[Sequence[int]]) -> Mono:
    return tuple(sorted((tuple(v) for v in vars_), key=_vkey))


def display_order(m: Mono) -> list[Var]:
    """Longer index sets first, as in X_J X_L with |J| >= |L|."""
    return sorted(m, key=lambda v: (-len(v), v))


def sort_sign(t: Sequence[int]) -> tuple[int, Var]:
    """(sign, sorted tuple) with X_t = sign * X_sorted; sign 0 on repeated entries."""
    t = tuple(t)
    if len(set(t)) != len(t):
        return 0, ()
    inv = sum(1 for a, b in itertools.combinations(t, 2) if a > b)
    return (-1 if inv % 2 else 1), tuple(sorted(t))


# --------------------------------------------------------------- relations


@dataclass(frozen=True)
class QuadraticRelation:
    """A multihomogeneous polynomial, stored as a primitive integer vector with
    positive leading coefficient (so equal relations up to scalar compare equal)."""

    terms: tuple  # ((Mono, int), ...) sorted by Mono

    @property
    def degree(self) -> tuple[int, ...]:
        return tuple(sorted(len(v) for v in self.terms[0][0]))

    def as_dict(self) -> dict:
        return dict(self.terms)

    def to_json(self) -> dict:
        return {"terms": [[list(v) for v in display_order(m)] + [c] for m, c in self.terms]}

    def __str__(self) -> str:
        parts = []
        for m, c in self.terms:
            name = "".join("X" + "".join(map(str, v)) for v in display_order(m))
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else str(abs(c))
            parts.append(f"{sign} {mag}{name}")
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else s


def make_relation(terms: Mapping) -> QuadraticRelation | None:
    items = [(m, Fraction(c)) for m, c in terms.items() if c]
    if not items:
        return None
    items.sort(key=lambda mc: mc[0])
    den = 1
    for _, c in items:
        den = lcm(den, c.denominator)
    ints = [(m, int(c * den)) for m, c in items]
    g = 0
    for _, c in ints:
        g = gcd(g, c)
    if ints[0][1] < 0:
        g = -g
    return QuadraticRelation(tuple((m, c // g) for m, c in ints))


def degenerate_relation(J: Sequence[int], L: Sequence[int], k: int, K: Iterable[int]) -> QuadraticRelation | None:
    """R^K_{J,L;k}(0): the exchange relation of the first k entries of L, keeping
    the terms of minimal K-degree on the L side.  None if nothing survives."""
    J, L, K = tuple(J), tuple(L), frozenset(K)
    r, s = len(J), len(L)
    if len(set(J)) != r or len(set(L)) != s:
        raise ValueError("index tuples must have distinct entries")
    if not (1 <= s <= r):
        raise ValueError("need 1 <= |L| <= |J|")
    if not 1 <= k <= s:
        raise ValueError(f"k={k} out of range 1..{s}")

    def deg(t):
        return sum(1 for x in t if x in K)

    raw = [(deg(L), 1, J, L)]
    for alpha in itertools.combinations(range(r), k):
        ja = list(J)
        for idx, pos in enumerate(alpha):
            ja[pos] = L[idx]
        la = tuple(J[p] for p in alpha) + L[k:]
        raw.append((deg(la), -1, tuple(ja), la))
    low = min(d for d, *_ in raw)
    acc: dict = {}
    for d, c, A, B in raw:
        if d != low:
            continue
        sa, a = sort_sign(A)
        sb, b = sort_sign(B)
        if sa and sb:
            key = make_mono((a, b))
            acc[key] = acc.get(key, 0) + c * sa * sb
    return make_relation(acc)


def _subsets(N: int, k: int) -> list[Var]:
    return list(itertools.combinations(range(1, N + 1), k))


def _exchange_family(r: int, s: int, N: int, K: frozenset, limit_k) -> list[QuadraticRelation]:
    """All R^K_{J,L;k}(0) with |J| = r, |L| = s.

    J only matters up to sign, so it runs over sets; L matters through the
    set of its first k entries and the set of the rest.
    """
    out = []
    for J in _subsets(N, r):
        for Lset in _subsets(N, s):
            for k in range(1, limit_k(Lset) + 1):
                for head in itertools.combinations(Lset, k):
                    L = head + tuple(x for x in Lset if x not in head)
                    rel = degenerate_relation(J, L, k, K)
                    if rel is not None:
                        out.append(rel)
    return out


def classical_pluecker(d1: int, d2: int, N: int) -> list[QuadraticRelation]:
    """Quadratic Plücker relations between Gr_{d1} and Gr_{d2} of C^N
    (incidence relations when d1 != d2)."""
    if min(d1, d2) <= 0:
        return []
    r, s = max(d1, d2), min(d1, d2)
    if r > N:
        return []
    rels = _exchange_family(r, s, N, frozenset(), lambda L: len(L))
    return _dedupe(rels)


def _dedupe(rels: Iterable[QuadraticRelation]) -> list[QuadraticRelation]:
    seen = {}
    for rel in rels:
        seen.setdefault(rel.terms, rel)
    return [seen[k] for k in sorted(seen)]


# ------------------------------------------------------- projection specs


@dataclass(frozen=True)
class ProjectionSpec:
    """Kill-sets I_1..I_{n-1} of the coordinate projections pr_{I_k} on C^N."""

    N: int
    I: tuple

    def __post_init__(self):
        sets = tuple(frozenset(int(x) for x in s) for s in self.I)
        for s in sets:
            if any(not 1 <= x <= self.N for x in s):
                raise ValueError(f"kill-set {sorted(s)} not inside [1, {self.N}]")
        object.__setattr__(self, "I", sets)

    @property
    def n(self) -> int:
        return len(self.I) + 1

    def K(self, s: int, r: int) -> frozenset:
        """I_s | ... | I_{r-1} for vertices s < r."""
        out: frozenset = frozenset()
        for k in range(s, r):
            out |= self.I[k - 1]
        return out

    def rep(self) -> MatrixRep:
        N = self.N
        maps = [
            linalg.matrix([[int(p == q and p + 1 not in kill) for q in range(N)] for p in range(N)])
            for kill in self.I
        ]
        return MatrixRep.from_maps(maps, (N,) * self.n)

    def to_json(self) -> dict:
        return {"N": self.N, "I": [sorted(s) for s in self.I]}

    @classmethod
    def from_json(cls, data: Mapping) -> "ProjectionSpec":
        return cls(int(data["N"]), tuple(tuple(s) for s in data["I"]))


def default_context(spec: ProjectionSpec) -> QuiverContext:
    """Complete flags when N = n + 1."""
    if spec.N != spec.n + 1:
        raise ValueError("pass a QuiverContext for partial flags (N != n + 1)")
    return QuiverContext(spec.n, spec.N, tuple(range(1, spec.n + 1)))


def factor_projection(f) -> tuple[frozenset, object, object]:
    """Write f = h^{-1} pr_K g with g, h invertible; g = h = None when f is
    already a 0/1 diagonal matrix."""
    size = len(f)
    if all(f[p][q] == (f[p][p] if p == q else 0) for p in range(size) for q in range(size)) and all(
        f[p][p] in (0, 1) for p in range(size)
    ):
        return frozenset(p + 1 for p in range(size) if f[p][p] == 0), None, None
    red, piv = linalg.rref(f)
    pivset = set(piv)
    kill = [c for c in range(size) if c not in pivset]
    ginv_cols = {}
    for c in range(size):
        if c in pivset:
            ginv_cols[c] = tuple(Fraction(int(x == c)) for x in range(size))
        else:
            v = [Fraction(0)] * size
            v[c] = Fraction(1)
            for row, pc in enumerate(piv):
                v[pc] = -red[row][c]
            ginv_cols[c] = tuple(v)
    hinv_cols = {c: tuple(f[x][c] for x in range(size)) for c in piv}
    image = [hinv_cols[c] for c in piv]
    extra = []
    for x in range(size):
        unit = tuple(Fraction(int(y == x)) for y in range(size))
        if linalg.rank(tuple(image + extra + [unit])) > len(image) + len(extra):
            extra.append(unit)
    for c, vec in zip(kill, extra):
        hinv_cols[c] = vec
    ginv = linalg.transpose(tuple(ginv_cols[c] for c in range(size)))
    hinv = linalg.transpose(tuple(hinv_cols[c] for c in range(size)))
    return frozenset(c + 1 for c in kill), linalg.inverse(ginv), linalg.inverse(hinv)


def _wedge_table(m, k: int) -> dict:
    """Y_S = sum_T table[S][T] X_T for the coordinates of m(V), V in Gr_k."""
    size = len(m)
    idx = linalg.subsets(size, k)
    w = linalg.wedge_power(m, k)
    table = {}
    for a, S in enumerate(idx):
        row = {tuple(x + 1 for x in T): w[a][b] for b, T in enumerate(idx) if w[a][b]}
        table[tuple(x + 1 for x in S)] = row
    return table


def _substitute(rel: QuadraticRelation, tables: Mapping[int, dict]) -> QuadraticRelation | None:
    acc: dict = {}
    for mono, c in rel.terms:
        a, b = mono
        ra = tables[len(a)][a] if len(a) in tables else {a: 1}
        rb = tables[len(b)][b] if len(b) in tables else {b: 1}
        for x, cx in ra.items():
            for y, cy in rb.items():
                key = make_mono((x, y))
                acc[key] = acc.get(key, 0) + c * cx * cy
    return make_relation(acc)


class PlueckerIdeal:
    """Generators (P1) + (P2) of the degenerate Plücker ideal of Gr_e(rep)."""

    def __init__(self, ctx: QuiverContext, generators: Sequence[QuadraticRelation]):
        self.ctx = ctx
        self.generators = list(generators)
        self._sizes = {e: v for v, e in enumerate(ctx.e)}

    def multidegree(self, mono: Mono) -> tuple[int, ...]:
        deg = [0] * self.ctx.n
        for v in mono:
            deg[self._sizes[len(v)]] += 1
        return tuple(deg)

    def monomials(self, mu: Sequence[int]) -> list[Mono]:
        return monomials_of_degree(self.ctx, tuple(mu))

    def relation_space(self, mu: Sequence[int]) -> linalg.EchelonSpace:
        """Span of generator multiples in multidegree mu, over monomial keys."""
        mu = tuple(mu)
        space = linalg.EchelonSpace()
        for rel in self.generators:
            d = self.multidegree(rel.terms[0][0])
            rest = tuple(a - b for a, b in zip(mu, d))
            if any(x < 0 for x in rest):
                continue
            for co in monomials_of_degree(self.ctx, rest):
                vec: dict = {}
                for m, c in rel.terms:
                    key = _mono_key(make_mono(m + co))
                    vec[key] = vec.get(key, 0) + c
                space.add(vec)
        return space

    def graded_dim(self, mu: Sequence[int]) -> int:
        guard(sum(mu) <= MAX_GRADED_DEGREE, f"graded_dim guard: total degree <= {MAX_GRADED_DEGREE}")
        if len(mu) != self.ctx.n or any(m < 0 for m in mu):
            raise ValueError("multidegree must have n non-negative entries")
        total = len(self.monomials(mu))
        return total - len(self.relation_space(mu))

    def reduces_to(self, poly: Mapping[Mono, Fraction], mu: Sequence[int]) -> bool:
        """True iff ``poly`` lies in the ideal in multidegree mu."""
        space = self.relation_space(mu)
        return space.contains({_mono_key(m): c for m, c in poly.items()})

    def vanishes_on(self, flag: Sequence[Sequence]) -> list[QuadraticRelation]:
        """Generators that do not vanish on the flag (each U_v a list of basis columns)."""
        cache: dict = {}

        def coord(var: Var):
            if var not in cache:
                v = self._sizes[len(var)]
                cols = flag[v]
                cache[var] = linalg.det(tuple(tuple(col[x - 1] for col in cols) for x in var))
            return cache[var]

        bad = []
        for rel in self.generators:
            val = sum((c * coord(a) * coord(b) for (a, b), c in rel.terms), Fraction(0))
            if val:
                bad.append(rel)
        return bad


MAX_GRADED_DEGREE = 3


def _mono_key(m: Mono):
    return tuple(_vkey(v) for v in m)


@lru_cache(maxsize=None)
def monomials_of_degree(ctx: QuiverContext, mu: tuple) -> list[Mono]:
    per_vertex = []
    for v, m in enumerate(mu):
        per_vertex.append(list(itertools.combinations_with_replacement(_subsets(ctx.N, ctx.e[v]), m)))
    out = []
    for choice in itertools.product(*per_vertex):
        out.append(make_mono(x for part in choice for x in part))
    return sorted(out, key=_mono_key)


def _require_strict(ctx: QuiverContext) -> None:
    if any(a >= b for a, b in zip(ctx.e, ctx.e[1:])):
        raise ValueError("Plücker relations need strictly increasing e")


def _check_flat(ctx: QuiverContext, rep: MatrixRep) -> RankCollection:
    r = ranks_of_matrices(rep)
    if classify(ctx, r) is LocusLabel.NonFlat:
        raise ValueError(f"representation is not in the flat locus (ranks {r})")
    return r


def _build(ctx: QuiverContext, pair_data: Mapping) -> PlueckerIdeal:
    N, e = ctx.N, ctx.e
    gens: list[QuadraticRelation] = []
    for v in range(ctx.n):
        gens += classical_pluecker(e[v], e[v], N)
    for (a, b), (K, g, h) in sorted(pair_data.items()):
        s, r = e[a - 1], e[b - 1]
        family = _exchange_family(r, s, N, K, lambda L: max(1, len(set(L) - K)))
        if g is not None:
            tables = {s: _wedge_table(g, s), r: _wedge_table(h, r)}
            family = [x for x in (_substitute(rel, tables) for rel in family) if x is not None]
        gens += family
    return PlueckerIdeal(ctx, _dedupe(gens))


def ideal_generators(spec: ProjectionSpec, ctx: QuiverContext | None = None, check_flat: bool = True) -> PlueckerIdeal:
    ctx = ctx or default_context(spec)
    if spec.N != ctx.N or spec.n != ctx.n:
        raise ValueError("projection spec does not match the context")
    _require_strict(ctx)
    if check_flat:
        _check_flat(ctx, spec.rep())
    pair_data = {(a, b): (spec.K(a, b), None, None) for (a, b) in pairs(ctx.n)}
    return _build(ctx, pair_data)


def ideal_generators_for_rep(rep: MatrixRep, ctx: QuiverContext, check_flat: bool = True) -> PlueckerIdeal:
    """Generators for an arbitrary point: each composite f_{a,b} is factored as
    h^{-1} pr_K g and the R^K relations are rewritten in the original coordinates."""
    _require_strict(ctx)
    if rep.dims != ctx.d:
        raise ValueError("representation does not have dimension vector (N, ..., N)")
    if check_flat:
        _check_flat(ctx, rep)
    pair_data = {(a, b): factor_projection(rep.composite(a, b)) for (a, b) in pairs(ctx.n)}
    return _build(ctx, pair_data)


# ------------------------------------------------------------- tableaux


@dataclass(frozen=True)
class PbwTableau:
    """Columns listed left to right, each read top to bottom."""

    columns: tuple

    def __post_init__(self):
        object.__setattr__(self, "columns", tuple(tuple(int(x) for x in c) for c in self.columns))

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.columns)

    def reading_key(self) -> tuple:
        """Entries from the last column to the first, each bottom to top; the
        tableau order compares these sequences lexicographically."""
        return tuple(x for col in reversed(self.columns) for x in reversed(col))


def pbw_column(var: Sequence[int]) -> tuple[int, ...]:
    """Column filling of X_S: entries a <= |S| sit in row a, larger entries fill
    the remaining rows in decreasing order."""
    var = sorted(var)
    size = len(var)
    small = {x for x in var if x <= size}
    big = sorted((x for x in var if x > size), reverse=True)
    it = iter(big)
    return tuple(a if a in small else next(it) for a in range(1, size + 1))


def is_pbw_semistandard(t: PbwTableau, literal: bool = False) -> bool:
    """The three PBW conditions.

    The dominance condition looks for a witness ``T[i0][j-1] >= T[i][j]`` with
    ``i <= i0``; ``literal=True`` drops that lower bound (any row of the previous
    column), which overcounts, e.g. 21 monomials of shape 2*omega_2 for N = 4.
    """
    cols = t.columns
    lengths = [len(c) for c in cols]
    if any(a < b for a, b in zip(lengths, lengths[1:])):
        return False
    for col in cols:
        size = len(col)
        if len(set(col)) != size:
            return False
        for i, x in enumerate(col, start=1):
            if x <= size and x != i:
                return False
        big = [x for x in col if x > size]
        if any(a <= b for a, b in zip(big, big[1:])):
            return False
    for j in range(1, len(cols)):
        prev = cols[j - 1]
        for i, x in enumerate(cols[j]):
            window = prev if literal else prev[i:]
            if not any(y >= x for y in window):
                return False
    return True


def tableau_orderings(mono: Mono) -> list[PbwTableau]:
    """Tableaux of a monomial: columns by decreasing length, every distinct
    arrangement of equal-length columns."""
    groups = itertools.groupby(sorted(mono, key=lambda v: -len(v)), key=len)
    blocks = [sorted(set(itertools.permutations([pbw_column(v) for v in grp]))) for _, grp in groups]
    out = []
    for combo in itertools.product(*blocks):
        out.append(PbwTableau(tuple(c for block in combo for c in block)))
    return out


def pbw_tableau(mono: Mono) -> PbwTableau | None:
    """The smallest PBW semi-standard arrangement of the monomial, if any."""
    good = [t for t in tableau_orderings(mono) if is_pbw_semistandard(t)]
    return min(good, key=lambda t: t.reading_key()) if good else None


def is_pbw_monomial(mono: Mono) -> bool:
    return pbw_tableau(mono) is not None


def canonical_tableau(mono: Mono) -> PbwTableau:
    t = pbw_tableau(mono)
    if t is not None:
        return t
    return min(tableau_orderings(mono), key=lambda t: t.reading_key())


def pbw_monomials(ctx: QuiverContext, mu: Sequence[int]) -> list[Mono]:
    return [m for m in monomials_of_degree(ctx, tuple(mu)) if is_pbw_monomial(m)]


def pbw_count(ctx: QuiverContext, mu: Sequence[int]) -> int:
    return len(pbw_monomials(ctx, mu))


# ---------------------------------------------------------- straightening


class StraighteningCycle(InvariantViolation):
    pass


def _check_straightening_spec(spec: ProjectionSpec) -> None:
    for k, s in enumerate(spec.I, start=1):
        if not s <= {k, k + 1}:
            raise ValueError(f"straightening needs I_k inside {{k, k+1}}; I_{k} = {sorted(s)}")


def straighten(mono: Sequence[Sequence[int]], spec: ProjectionSpec, ctx: QuiverContext | None = None) -> dict:
    """Rewrite a Plücker monomial as a combination of PBW semi-standard monomials.

    Returns ``{Mono: Fraction}``.  Every rewrite step is checked to decrease
    the tableau order; a revisited monomial raises StraighteningCycle.
    """
    ctx = ctx or default_context(spec)
    _check_straightening_spec(spec)
    if ctx.e != tuple(range(1, ctx.n + 1)) or ctx.N != ctx.n + 1:
        raise ValueError("straightening is implemented for complete flags (N = n + 1)")
    _check_flat(ctx, spec.rep())
    memo: dict = {}
    active: set = set()

    def rec(m: Mono) -> dict:
        if m in memo:
            return memo[m]
        if m in active:
            raise StraighteningCycle(f"straightening revisits {m}")
        if is_pbw_monomial(m):
            memo[m] = {m: Fraction(1)}
            return memo[m]
        active.add(m)
        out: dict = {}
        for new, c in _straighten_step(m, spec).items():
            for mm, cc in rec(new).items():
                out[mm] = out.get(mm, 0) + c * cc
        active.discard(m)
        memo[m] = {k: v for k, v in out.items() if v}
        return memo[m]

    return rec(make_mono(tuple(sorted(v)) for v in mono))


def _straighten_step(m: Mono, spec: ProjectionSpec) -> dict:
    t = canonical_tableau(m)
    cols = t.columns
    for j in range(1, len(cols)):
        A, B = cols[j - 1], cols[j]
        # least k0 with A_k < B_{k0} for every k >= k0
        k0 = next((i for i, x in enumerate(B, start=1) if max(A[i - 1 :]) < x), None)
        if k0 is None:
            continue
        r, s = len(A), len(B)
        K = spec.K(s, r) if s < r else frozenset()
        if any(x in K for x in B[:k0]):
            raise InvariantViolation(f"exchanged entries of {B} meet K={sorted(K)}")
        others = [cols[x] for x in range(len(cols)) if x not in (j - 1, j)]
        out: dict = {}
        old_key = t.reading_key()
        for alpha in itertools.combinations(range(r), k0):
            if any(A[p] in K for p in alpha):
                continue
            na = list(A)
            for idx, pos in enumerate(alpha):
                na[pos] = B[idx]
            nb = tuple(A[p] for p in alpha) + B[k0:]
            sa, a = sort_sign(na)
            sb, b = sort_sign(nb)
            if not (sa and sb):
                continue
            new = make_mono([a, b] + [tuple(sorted(c)) for c in others])
            if canonical_tableau(new).reading_key() >= old_key:
                raise InvariantViolation(f"straightening step does not descend: {m} -> {new}")
            out[new] = out.get(new, 0) + sa * sb * _column_sign(A) * _column_sign(B)
        return {k: v for k, v in out.items() if v}
    raise InvariantViolation(f"{m} is not PBW semi-standard but no column pair violates dominance")


def _column_sign(col: Sequence[int]) -> int:
    return sort_sign(col)[0]


# --------------------------------------------------------- canonical points


def _project(ctx: QuiverContext, full_maps: Sequence) -> MatrixRep:
    """Forget all vertices of the complete-flag representation except e_1..e_n."""
    N = ctx.N
    maps = []
    for v in range(ctx.n - 1):
        out = linalg.identity(N)
        for k in range(ctx.e[v], ctx.e[v + 1]):
            out = linalg.matmul(full_maps[k - 1], out)
        maps.append(out)
    return MatrixRep.from_maps(maps, (N,) * ctx.n)


@dataclass(frozen=True)
class CanonicalPoint:
    rep: MatrixRep
    full_maps: tuple
    params: SliceParams | None


def _canon_free_positions(size: int, i: int) -> list[tuple[int, int]]:
    """Upper-triangular entries of f_i left free by the canonical pattern."""
    out = []
    for a in range(1, size + 1):
        for b in range(a, size + 1):
            if a == b and (a < i or a > i + 1):
                continue
            if a != b and ((a < i and b < i) or (a > i + 1 and b > i + 1)):
                continue
            out.append((a, b))
    return out


def _canon_fixed(size: int, i: int):
    m = [[Fraction(0)] * size for _ in range(size)]
    for a in range(1, size + 1):
        if a < i or a > i + 1:
            m[a - 1][a - 1] = Fraction(1)
    return m


def canonical_point(ctx: QuiverContext, r: RankCollection, allow_r2: bool = False) -> CanonicalPoint:
    """A point of the orbit of r with the canonical matrix pattern.

    Flat-irreducible orbits are searched on the slice with lambda in {0, 1};
    with ``allow_r2`` the orbit of r^2 is searched over 0/1 fillings of the
    canonical pattern.
    """
    N = ctx.N
    full_n = N - 1
    if ctx.e[-1] >= N or any(a >= b for a, b in zip(ctx.e, ctx.e[1:])):
        raise ValueError("canonical points need 1 <= e_1 < ... < e_n < N")
    label = classify(ctx, r)
    if label is not LocusLabel.FlatIrreducible:
        if not (allow_r2 and r == r_star(ctx, 2)):
            raise ValueError(f"canonical points are provided for flat-irreducible orbits, got {label.value}")
        return _canonical_r2(ctx, r)
    positions = SliceParams.positions(full_n)
    best = None
    for bits in itertools.product((0, 1), repeat=len(positions)):
        params = SliceParams(full_n, {p: b for p, b in zip(positions, bits)})
        full = slice_maps(params)
        rep = _project(ctx, full)
        got = ranks_of_matrices(rep)
        if got == r:
            return CanonicalPoint(rep, tuple(full), params)
        miss = sum(abs(x - y) for x, y in zip(got.values(), r.values()))
        if best is None or miss < best[0]:
            best = (miss, got)
    raise ValueError(f"no 0/1 slice point realizes {r}; closest ranks {best[1]} (distance {best[0]})")


def _canonical_r2(ctx: QuiverContext, r: RankCollection) -> CanonicalPoint:
    N = ctx.N
    full_n = N - 1
    guard(N <= 4, "r^2 canonical search guard: N <= 4")
    free = [_canon_free_positions(N, i) for i in range(1, full_n)]
    flat = [(i, pos) for i in range(full_n - 1) for pos in free[i]]
    for bits in itertools.product((0, 1), repeat=len(flat)):
        mats = [_canon_fixed(N, i) for i in range(1, full_n)]
        for (i, (a, b)), x in zip(flat, bits):
            mats[i][a - 1][b - 1] = Fraction(x)
        full = [tuple(tuple(row) for row in m) for m in mats]
        rep = _project(ctx, full)
        if ranks_of_matrices(rep) == r:
            return CanonicalPoint(rep, tuple(full), None)
    raise ValueError(f"no 0/1 canonical pattern realizes {r}")


def graded_dim(spec, mu: Sequence[int], ctx: QuiverContext | None = None) -> int:
    """Dimension of the multidegree-mu part of the quotient by the Plücker ideal.

    ``spec`` is a ProjectionSpec or a MatrixRep (the latter needs ``ctx``).
    """
    if isinstance(spec, ProjectionSpec):
        ideal = ideal_generators(spec, ctx)
    else:
        if ctx is None:
            raise ValueError("a QuiverContext is required for a MatrixRep")
        ideal = ideal_generators_for_rep(spec, ctx)
    return ideal.graded_dim(mu)


def evaluation_rank(ctx: QuiverContext, rep: MatrixRep, mu: Sequence[int], flags: Sequence) -> int:
    """Rank of the matrix (monomial evaluated at sampled flag); a lower bound for
    the coordinate-ring dimension in multidegree mu, sharp for enough generic points."""
    monos = monomials_of_degree(ctx, tuple(mu))
    sizes = {e: v for v, e in enumerate(ctx.e)}
    rows = []
    for flag in flags:
        cache: dict = {}

        def coord(var):
            if var not in cache:
                cols = flag[sizes[len(var)]]
                cache[var] = linalg.det(tuple(tuple(col[x - 1] for col in cols) for x in var))
            return cache[var]

        row = []
        for m in monos:
            val = Fraction(1)
            for var in m:
                val *= coord(var)
            row.append(val)
        rows.append(tuple(row))
    return linalg.rank(tuple(rows))
