"""Quiver Grassmannians Gr_e(M) through the stratification by isomorphism class
of the subrepresentation."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .errors import Inconclusive, guard
from .parallel import ordered_map
from .quiver import (
    MatrixRep,
    QuiverContext,
    RepClass,
    hom_dim,
    hom_indec,
    injective_of_dim,
    intervals,
    interval_matrices,
    iter_classes,
    iter_classes_bounded,
)

SAMPLES = 8
COEFF_BOUND = 10**6
FALLBACK_PRIMES = (2, 3)
FALLBACK_MAX_POINTS = 3**9


def split_rng(seed, key) -> random.Random:
    """Independent, reproducible stream for ``key`` derived from ``seed``."""
    return random.Random(f"{seed}:{key}")


def hom_space(a: MatrixRep, b: MatrixRep) -> list[tuple]:
    """Basis of Hom(a, b) as tuples of per-vertex matrices ``phi_v : a_v -> b_v``.

    Solves ``phi_{v+1} a_v = b_v phi_v`` for every arrow.
    """
    if a.n != b.n:
        raise ValueError("representations of different quivers")
    n = a.n
    offsets = []
    total = 0
    for v in range(n):
        offsets.append(total)
        total += a.dims[v] * b.dims[v]

    def var(v, row, col):
        return offsets[v] + row * a.dims[v] + col

    eqs = []
    for v in range(n - 1):
        fa, fb = a.maps[v], b.maps[v]
        # entry (p, q) of phi_{v+1} fa - fb phi_v, with p in b_{v+1}, q in a_v
        for p in range(b.dims[v + 1]):
            for q in range(a.dims[v]):
                row = [Fraction(0)] * total
                for s in range(a.dims[v + 1]):
                    c = fa[s][q]
                    if c:
                        row[var(v + 1, p, s)] += c
                for s in range(b.dims[v]):
                    c = fb[p][s]
                    if c:
                        row[var(v, s, q)] -= c
                if any(row):
                    eqs.append(tuple(row))
    basis = linalg.kernel_basis(tuple(eqs), total)
    out = []
    for vec in basis:
        out.append(tuple(_unflatten(vec, offsets[v], b.dims[v], a.dims[v]) for v in range(n)))
    return out


def _unflatten(vec, start, rows, cols):
    return tuple(tuple(vec[start + r * cols + c] for c in range(cols)) for r in range(rows))


def _combine(basis: Sequence[tuple], coeffs: Sequence) -> tuple:
    n = len(basis[0])
    out = []
    for v in range(n):
        m = basis[0][v]
        acc = [[Fraction(0)] * len(m[0]) if m else [] for _ in m]
        for c, elt in zip(coeffs, basis):
            if c:
                for r, row in enumerate(elt[v]):
                    for col, x in enumerate(row):
                        if x:
                            acc[r][col] += c * x
        out.append(tuple(tuple(r) for r in acc))
    return tuple(out)


def _is_mono(phi: tuple, dims: Sequence[int]) -> bool:
    return all(linalg.rank(phi[v]) == dims[v] for v in range(len(dims)) if dims[v])


def _random_round(basis, dims, rng: random.Random) -> bool:
    for _ in range(SAMPLES):
        coeffs = [rng.randint(-COEFF_BOUND, COEFF_BOUND) for _ in basis]
        if _is_mono(_combine(basis, coeffs), dims):
            return True
    return False


def _integer_basis(basis):
    from math import lcm

    out = []
    for elt in basis:
        den = 1
        for m in elt:
            for row in m:
                for x in row:
                    den = lcm(den, x.denominator)
        out.append(tuple(tuple(tuple(int(x * den) for x in row) for row in m) for m in elt))
    return out


def _exhaustive_mod_p(basis, dims, p: int) -> bool | None:
    """Search all F_p combinations; None if the space is too large to scan.

    A hit is a genuine mono over the rationals: the integer lift has a
    non-vanishing maximal minor modulo p.
    """
    h = len(basis)
    if p**h > FALLBACK_MAX_POINTS:
        return None
    ib = _integer_basis(basis)
    n = len(dims)
    for coeffs in itertools.product(range(p), repeat=h):
        if not any(coeffs):
            continue
        ok = True
        for v in range(n):
            if not dims[v]:
                continue
            m = ib[0][v]
            mat = [
                [sum(c * elt[v][r][col] for c, elt in zip(coeffs, ib)) % p for col in range(len(m[0]))]
                for r in range(len(m))
            ]
            if linalg.rank_mod_p(mat, p) != dims[v]:
                ok = False
                break
        if ok:
            return True
    return False


def embeds_matrices(a: MatrixRep, b: MatrixRep, rng_seed=0, key="") -> bool:
    """Decide whether a monomorphism ``a -> b`` exists."""
    if any(x > y for x, y in zip(a.dims, b.dims)):
        return False
    if not any(a.dims):
        return True
    basis = hom_space(a, b)
    if not basis:
        return False
    if _random_round(basis, a.dims, split_rng(rng_seed, f"mono:{key}")):
        return True
    for p in FALLBACK_PRIMES:
        found = _exhaustive_mod_p(basis, a.dims, p)
        if found:
            raise Inconclusive(f"random sampling missed a mono found over F_{p} ({key})")
    if _random_round(basis, a.dims, split_rng(rng_seed, f"mono-retry:{key}")):
        raise Inconclusive(f"two random rounds disagree on mono existence ({key})")
    return False


def embeds(k: RepClass, m: RepClass, rng_seed=0) -> bool:
    if k.n != m.n:
        raise ValueError("representations of different quivers")
    if any(x > y for x, y in zip(k.dim_vector, m.dim_vector)):
        return False
    if not hom_filter(k, m):
        return False
    return embeds_matrices(interval_matrices(k), interval_matrices(m), rng_seed, key=repr((k, m)))


def hom_filter(k: RepClass, m: RepClass) -> bool:
    """Necessary condition for k to embed in m: hom(U, k) <= hom(U, m) for all U."""
    for u in intervals(k.n):
        hk = sum(v for iv, v in k.m.items() if hom_indec(u, iv))
        hm = sum(v for iv, v in m.m.items() if hom_indec(u, iv))
        if hk > hm:
            return False
    return True


def stratum_dim(k: RepClass, m: RepClass) -> int:
    return hom_dim(k, m) - hom_dim(k, k)


@dataclass(frozen=True)
class Stratum:
    k: RepClass
    dim: int


@dataclass(frozen=True)
class GrassmannianInfo:
    dim: int
    components: int
    maximal_strata: tuple[RepClass, ...]
    strata: tuple[Stratum, ...]
    exact: bool  # component count is exact (flat regime) rather than a lower bound

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "components": self.components,
            "components_exact": self.exact,
            "maximal_strata": [k.to_json() for k in self.maximal_strata],
            "strata": [{"k": s.k.to_json(), "dim": s.dim} for s in self.strata],
        }


MAX_GR_N = 4
MAX_GR_N_AMBIENT = 6


def grassmannian_dim(ctx: QuiverContext, m: RepClass, rng_seed=0) -> GrassmannianInfo:
    guard(
        ctx.n <= MAX_GR_N and ctx.N <= MAX_GR_N_AMBIENT,
        f"grassmannian_dim guard: n <= {MAX_GR_N}, N <= {MAX_GR_N_AMBIENT}",
    )
    if m.n != ctx.n:
        raise ValueError("representation does not match the context")
    candidates = [k for k in iter_classes(ctx.n, ctx.e) if hom_filter(k, m)]
    flags = ordered_map(lambda k: embeds(k, m, rng_seed), candidates)
    strata = tuple(Stratum(k, stratum_dim(k, m)) for k, ok in zip(candidates, flags) if ok)
    if not strata:
        raise ValueError("Gr_e(M) is empty")
    top = max(s.dim for s in strata)
    maximal = tuple(s.k for s in strata if s.dim == top)
    return GrassmannianInfo(top, len(maximal), maximal, strata, top == ctx.expected_dim)


@dataclass(frozen=True)
class TcResult:
    flat: bool
    equality_classes: tuple[RepClass, ...]
    violations: tuple[RepClass, ...]


def tc_criterion(ctx: QuiverContext, m: RepClass, rng_seed=0) -> TcResult:
    """Dimension criterion for Gr_e(M) with M = P + X, P the maximal projective summand."""
    guard(
        ctx.n <= MAX_GR_N and ctx.N <= MAX_GR_N_AMBIENT + 1,
        f"tc_criterion guard: n <= {MAX_GR_N}, N <= {MAX_GR_N_AMBIENT + 1}",
    )
    proj, rest = m.split_projective()
    inj = injective_of_dim(ctx.n, ctx.f)
    dp, dx = proj.dim_vector, rest.dim_vector
    lo = [max(0, e - p) for e, p in zip(ctx.e, dp)]
    hi = [min(e, x) for e, x in zip(ctx.e, dx)]
    if any(a > b for a, b in zip(lo, hi)):
        return TcResult(True, (), ())
    candidates = [k for k in iter_classes_bounded(ctx.n, lo, hi) if hom_filter(k, rest)]
    flags = ordered_map(lambda k: embeds(k, rest, rng_seed), candidates)
    equal, bad = [], []
    for k, ok in zip(candidates, flags):
        if not ok:
            continue
        lhs = hom_dim(k, k)
        rhs = hom_dim(k, rest) - hom_dim(k, inj)
        if lhs < rhs:
            bad.append(k)
        elif lhs == rhs and not k.split_projective()[0].m:
            equal.append(k)
    return TcResult(not bad, tuple(equal), tuple(bad))


def _random_full_rank(rows: int, cols: int, rng: random.Random):
    while True:
        m = linalg.matrix([[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)])
        if linalg.rank(m) == min(rows, cols):
            return m


def _column_basis(cols: list) -> list:
    """A maximal independent subset of the given column vectors."""
    out: list = []
    for c in cols:
        if linalg.rank(tuple(out + [c])) > len(out):
            out.append(c)
    return out


def point_sample(ctx: QuiverContext, rep: MatrixRep, rng_seed=0, key="") -> tuple:
    """A random point (U_1, ..., U_n) of Gr_e(rep); each U_i is returned as a
    tuple of basis column vectors."""
    rng = split_rng(rng_seed, f"point:{key}")
    dims = rep.dims
    if any(e > d for e, d in zip(ctx.e, dims)):
        raise ValueError("e exceeds the dimension vector")
    flag = []
    current: list = []
    for v in range(ctx.n):
        target = ctx.e[v]
        if v == 0:
            start: list = []
        else:
            f = rep.maps[v - 1]
            start = _column_basis([linalg.matvec(f, c) for c in current])
        basis = list(start)
        while len(basis) < target:
            cand = tuple(Fraction(rng.randint(-9, 9)) for _ in range(dims[v]))
            if linalg.rank(tuple(basis + [cand])) > len(basis):
                basis.append(cand)
        flag.append(tuple(basis))
        current = basis
    return tuple(flag)


def flag_is_valid(rep: MatrixRep, flag: Sequence[Sequence]) -> bool:
    """Exact check that dim U_i is as given and f_i(U_i) lies in U_{i+1}."""
    for v, basis in enumerate(flag):
        if basis and linalg.rank(tuple(basis)) != len(basis):
            return False
        if v + 1 < len(flag):
            img = [linalg.matvec(rep.maps[v], c) for c in basis]
            nxt = list(flag[v + 1])
            for w in img:
                if not linalg.solve_span_membership(w, nxt)[0]:
                    return False
    return True
