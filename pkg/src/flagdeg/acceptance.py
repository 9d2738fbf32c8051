"""The ten acceptance checks, shared by the test suite and ``flagdeg verify``."""

from __future__ import annotations

import itertools
import random
import time
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import arcs, deformed, linalg, loci, orbit_count, pluecker, quiver, strata
from .oracles import weyl_dim

RUNTIME_LIMITS = {1: 300.0, 4: 60.0, 7: 600.0}


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    seconds: float = 0.0
    failures: list = field(default_factory=list)
    data: dict = field(default_factory=dict)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" ({len(self.failures)} failures)" if self.failures else ""
        return f"[{status}] criterion {self.number}: {self.title} [{self.seconds:.1f}s]{extra}"

    def to_json(self) -> dict:
        return {
            "number": self.number,
            "title": self.title,
            "passed": self.passed,
            "failures": [str(f) for f in self.failures[:20]],
            "failure_count": len(self.failures),
            "data": self.data,
        }


def _finish(number: int, title: str, start: float, failures: list, data: dict) -> CriterionResult:
    elapsed = time.perf_counter() - start
    limit = RUNTIME_LIMITS.get(number)
    if limit is not None and elapsed > limit:
        failures = failures + [f"runtime {elapsed:.1f}s exceeds {limit:.0f}s"]
    return CriterionResult(number, title, not failures, elapsed, failures, data)


# 1 -------------------------------------------------------------------------


def criterion_1(seed: int = 0) -> CriterionResult:
    start = time.perf_counter()
    ctx = quiver.QuiverContext(3, 4, (1, 2, 3))
    failures, tally = [], Counter()
    for r in quiver.enumerate_orbits(ctx):
        m = quiver.ranks_to_mult(r)
        info = strata.grassmannian_dim(ctx, m, seed)
        tc = strata.tc_criterion(ctx, m, seed)
        label = loci.classify(ctx, r)
        flat = info.dim == ctx.expected_dim
        ok = (
            flat == (label is not loci.LocusLabel.NonFlat)
            and (flat and info.components == 1) == (label is loci.LocusLabel.FlatIrreducible)
            and tc.flat == flat
            and (not flat or len(tc.equality_classes) == info.components)
        )
        tally[label.value] += 1
        if not ok:
            failures.append((r.values(), label.value, info.dim, info.components, tc.flat))
    return _finish(1, "locus classification vs. quiver Grassmannian geometry (n=3, N=4)", start, failures,
                   {"orbits": sum(tally.values()), "labels": dict(sorted(tally.items()))})


# 2 -------------------------------------------------------------------------


def criterion_2(seed: int = 0) -> CriterionResult:
    start = time.perf_counter()
    ctx = quiver.QuiverContext(3, 4, (1, 2, 3))
    failures, found = [], Counter()
    singles = [loci.ranks_of_a(ctx, loci.witness_tuple(ctx, i)) for i in range(1, ctx.n)]
    for r in quiver.enumerate_orbits(ctx):
        label = loci.classify(ctx, r)
        try:
            w = loci.dominating_witness(ctx, r)
        except Exception as exc:  # noqa: BLE001 - reported as a failure
            failures.append((r.values(), repr(exc)))
            continue
        if label is loci.LocusLabel.FlatIrreducible:
            # no single witness may sit above a flat-irreducible orbit
            if any(s >= r for s in singles):
                failures.append((r.values(), "dominated although flat-irreducible"))
            continue
        a = loci.witness_tuple(ctx, *w[1:])
        if not loci.ranks_of_a(ctx, a) >= r:
            failures.append((r.values(), w))
        found[w[0]] += 1
    return _finish(2, "witness representations M(a) for every non-flat-irreducible orbit", start, failures,
                   {"witnesses": dict(sorted(found.items()))})


# 3 -------------------------------------------------------------------------


def criterion_3(seed: int = 0) -> CriterionResult:
    start = time.perf_counter()
    failures, counts = [], {}
    for n in (2, 3, 4):
        ctx = quiver.QuiverContext(n, n + 1, tuple(range(1, n + 1)))
        diagrams = arcs.enumerate_noncrossing(n)
        tc = strata.tc_criterion(ctx, loci.rep_M2(ctx), seed)
        from_arcs = Counter(arcs.rep_Nbar_A(n, a) for a in diagrams)
        from_tc = Counter(tc.equality_classes)
        counts[n] = [len(diagrams), len(tc.equality_classes)]
        if not (len(diagrams) == len(tc.equality_classes) == arcs.catalan(n)):
            failures.append((n, len(diagrams), len(tc.equality_classes), arcs.catalan(n)))
        if from_arcs != from_tc:
            failures.append((n, "arc representations differ from equality classes"))
        ranks = {tuple(sorted(arcs.rank_of_diagram(ctx, a).items())) for a in diagrams}
        if len(ranks) != len(diagrams):
            failures.append((n, "r(A) not injective"))
    return _finish(3, "Catalan many components of the mf-degenerate flag variety", start, failures,
                   {"counts": {str(k): v for k, v in counts.items()}})


# 4 -------------------------------------------------------------------------


def criterion_4(seed: int = 0) -> CriterionResult:
    start = time.perf_counter()
    failures, bell_coeffs = [], []
    for n in range(1, 5):
        prod = orbit_count.gen_fn_product(n, 4)
        direct = orbit_count.gen_fn_direct(n, 4)
        if prod != direct:
            failures.append((n, "series differ"))
        coeff = prod[(1,) * n]
        bell_coeffs.append(coeff)
        if coeff != orbit_count.bell(n):
            failures.append((n, coeff, orbit_count.bell(n)))
    for gap in range(0, 9):
        if orbit_count.count_lattice((gap,)) != gap + 1:
            failures.append(("n=2 closed form", gap))
    return _finish(4, "product generating function and Bell coefficients", start, failures,
                   {"bell": bell_coeffs})


# 5 -------------------------------------------------------------------------


def criterion_5(seed: int = 0, max_n: int = 4, max_N: int = 7) -> CriterionResult:
    start = time.perf_counter()
    failures, checked = [], 0
    orbit_sets = {}
    per_e: dict = {}
    for n in range(2, max_n + 1):
        for N in range(n + 1, max_N + 1):
            orbits = quiver.enumerate_orbits(quiver.QuiverContext(n, N, (1,) * n))
            for e in itertools.combinations(range(1, N), n):
                ctx = quiver.QuiverContext(n, N, e)
                r1 = loci.r_star(ctx, 1)
                flat_irr = {r for r in orbits if r >= r1}
                points = list(orbit_count.lattice_points(ctx))
                images = [orbit_count.lattice_to_ranks(ctx, f) for f in points]
                checked += 1
                per_e.setdefault(e, {})[N] = len(flat_irr)
                if set(images) != flat_irr or len(points) != len(flat_irr):
                    failures.append((n, N, e, f"{len(points)} lattice points, {len(set(images))} images, "
                                              f"{len(flat_irr)} flat-irreducible orbits"))
                    continue
                for f, r in zip(points, images):
                    if orbit_count.ranks_to_lattice(ctx, r) != f:
                        failures.append((n, N, e, "ranks_to_lattice is not a left inverse", f))
                        break
            orbit_sets[(n, N)] = len(orbits)
    for e, by_N in sorted(per_e.items()):
        if len(set(by_N.values())) > 1:
            failures.append((e, "orbit count depends on N", dict(sorted(by_N.items()))))
    return _finish(5, "lattice points of Q_e vs. flat-irreducible orbits (n <= 4, N <= 7)", start, failures,
                   {"dimension_vectors_checked": checked})


# 6 -------------------------------------------------------------------------

# relations listed for pr_{1,2}, pr_{2,3} on C^4, as {monomial: coefficient}
GOLDEN_MF_RELATIONS = [
    {((1, 2), (3,)): 1},
    {((1, 2), (4,)): 1},
    {((1, 3), (4,)): 1, ((1, 4), (3,)): -1},
    {((2, 3), (4,)): 1, ((2, 4), (3,)): -1},
    {((1, 2, 3), (4,)): 1},
    {((1, 2, 3), (1, 4)): 1},
    {((1, 2, 3), (2, 4)): 1, ((2, 3, 4), (1, 2)): 1},
    {((1, 2, 3), (3, 4)): 1, ((2, 3, 4), (1, 3)): 1},
    {((2, 3, 4), (1, 4)): 1},
    {((1, 2), (3, 4)): 1, ((1, 3), (2, 4)): -1, ((1, 4), (2, 3)): 1},
]


def golden_ideal() -> pluecker.PlueckerIdeal:
    ctx = quiver.QuiverContext(3, 4, (1, 2, 3))
    rels = [pluecker.make_relation({pluecker.make_mono(m): c for m, c in g.items()}) for g in GOLDEN_MF_RELATIONS]
    return pluecker.PlueckerIdeal(ctx, rels)


def criterion_6(seed: int = 0) -> CriterionResult:
    start = time.perf_counter()
    spec = pluecker.ProjectionSpec(4, ((1, 2), (2, 3)))
    ours = pluecker.ideal_generators(spec)
    golden = golden_ideal()
    failures = []
    for mu in itertools.product(range(3), repeat=3):
        if sum(mu) != 2:
            continue
        a, b = ours.relation_space(mu), golden.relation_space(mu)
        if len(a) != len(b) or not all(a.contains(v) for v in b.vectors()):
            failures.append((mu, len(a), len(b)))
    return _finish(6, "golden ideal of the mf-degenerate flag variety (n=3)", start, failures,
                   {"generators": len(ours.generators)})


# 7 -------------------------------------------------------------------------


def criterion_7(seed: int = 0) -> CriterionResult:
    start = time.perf_counter()
    ctx = quiver.QuiverContext(3, 4, (1, 2, 3))
    mus = [mu for mu in itertools.product(range(3), repeat=3) if 0 < sum(mu) <= 2] + [(1, 1, 1)]
    failures, rows = [], []
    for r in quiver.enumerate_orbits(ctx):
        if loci.classify(ctx, r) is not loci.LocusLabel.FlatIrreducible:
            continue
        point = pluecker.canonical_point(ctx, r)
        ideal = pluecker.ideal_generators_for_rep(point.rep, ctx)
        for mu in mus:
            got = ideal.graded_dim(mu)
            pbw = pluecker.pbw_count(ctx, mu)
            weyl = weyl_dim(mu, ctx.N)
            if not got == pbw == weyl:
                failures.append((r.values(), mu, got, pbw, weyl))
        rows.append(list(r.values()))
    return _finish(7, "graded dimensions = PBW tableaux = Weyl dimension at canonical points", start, failures,
                   {"orbits": rows, "omega_sum_dim": weyl_dim((1, 1, 1), 4)})


# 8 -------------------------------------------------------------------------

VANISHING_SPECS = [((1, 2), (2, 3)), ((), ()), ((2,), ()), ((2,), (3,)), ((1,), (3,))]
VANISHING_POINTS = 100


def criterion_8(seed: int = 0) -> CriterionResult:
    start = time.perf_counter()
    ctx = quiver.QuiverContext(3, 4, (1, 2, 3))
    failures, labels = [], {}
    for kill in VANISHING_SPECS:
        spec = pluecker.ProjectionSpec(4, kill)
        rep = spec.rep()
        labels[str(kill)] = loci.classify(ctx, quiver.ranks_of_matrices(rep)).value
        ideal = pluecker.ideal_generators(spec, ctx)
        for k in range(VANISHING_POINTS):
            flag = strata.point_sample(ctx, rep, seed, f"{kill}:{k}")
            if not strata.flag_is_valid(rep, flag):
                failures.append((kill, k, "sampled point is not in Gr_e(M)"))
                continue
            bad = ideal.vanishes_on(flag)
            if bad:
                failures.append((kill, k, [str(b) for b in bad]))
    return _finish(8, "generators vanish on sampled points (5 flat projection specs x 100)", start, failures,
                   {"specs": labels})


# 9 -------------------------------------------------------------------------


def _random_params(n: int, rng: random.Random, mode: str) -> deformed.SliceParams:
    def value():
        if mode == "zero":
            return 0
        if mode == "bits":
            return rng.randint(0, 1)
        return Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 7))

    return deformed.SliceParams(n, {pq: value() for pq in deformed.SliceParams.positions(n)})


def _random_matrix(size: int, rng: random.Random):
    return linalg.matrix([[Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(size)] for _ in range(size)])


def deformed_suite(seed: int = 0, jacobi_trials: int = 1000, hom_trials: int = 500, law_trials: int = 100) -> list:
    rng = random.Random(f"{seed}:deformed")
    failures = []
    # Jacobi and homomorphism on n = 3 with fresh generic parameters per trial
    for t in range(jacobi_trials):
        alg = deformed.DeformedAlgebra(_random_params(rng.randint(1, 3), rng, "gen"))
        x, y, z = (_random_matrix(alg.size, rng) for _ in range(3))
        br = lambda a, b: deformed.bracket(alg, a, b)  # noqa: E731
        total = linalg.mat_add(linalg.mat_add(br(x, br(y, z)), br(y, br(z, x))), br(z, br(x, y)))
        if not linalg.is_zero(total):
            failures.append(("jacobi", t))
    for t in range(hom_trials):
        alg = deformed.DeformedAlgebra(_random_params(rng.randint(1, 3), rng, rng.choice(["gen", "bits"])))
        x, y = _random_matrix(alg.size, rng), _random_matrix(alg.size, rng)
        px, py = deformed.phi(alg, x), deformed.phi(alg, y)
        lhs = deformed.phi(alg, deformed.bracket(alg, x, y))
        rhs = tuple(linalg.mat_sub(linalg.matmul(a, b), linalg.matmul(b, a)) for a, b in zip(px, py))
        if lhs != rhs or not deformed.is_endomorphism(alg, px):
            failures.append(("phi homomorphism", t))
    for n in (1, 2, 3, 4):
        for mode in ("zero", "gen", "bits"):
            alg = deformed.DeformedAlgebra(_random_params(n, rng, mode))
            if deformed.phi_kernel_on_lower(alg):
                failures.append(("phi kernel on n_-", n, mode))
    # group law
    for t in range(law_trials):
        alg = deformed.DeformedAlgebra(_random_params(rng.randint(2, 3), rng, rng.choice(["gen", "bits"])))
        a, b = rng.sample(range(1, alg.size + 1), 2)
        c = deformed.group_law_coefficient(alg, a, b)
        bad = deformed.excluded_parameter(alg, a, b)
        x, y = (Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(2))
        if x == bad or y == bad:
            continue
        prod = deformed.compose(deformed.group_element(alg, a, b, x), deformed.group_element(alg, a, b, y))
        z = x + y + c * x * y
        if z == bad or prod != deformed.group_element(alg, a, b, z):
            failures.append(("group law", t, a, b))
    # modules, essential sets, Minkowski independence
    for n in (1, 2, 3):
        modes = ["zero", "gen"] + ["bits"] * 10
        for mode in modes:
            alg = deformed.DeformedAlgebra(_random_params(n, rng, mode))
            for mu in itertools.product(range(3), repeat=n):
                if not 0 < sum(mu) <= 2:
                    continue
                dim = deformed.build_module(alg, mu).dim
                ess = deformed.essential_monomials(alg, mu)
                if not dim == len(ess) == weyl_dim(mu, n + 1):
                    failures.append(("module dim", n, mode, mu, dim, len(ess)))
                if not deformed.b_plus_preserves_line(alg, mu):
                    failures.append(("b_+ line", n, mode, mu))
                size, rank = deformed.minkowski_rank(alg, mu)
                if size != rank:
                    failures.append(("minkowski independence", n, mode, mu, size, rank))
            for k in range(1, n + 1):
                mu = tuple(int(i == k - 1) for i in range(n))
                got = sorted(tuple(s.items()) for s in deformed.essential_monomials(alg, mu))
                want = sorted(tuple(s.items()) for s in deformed.fundamental_essential_closed_form(n, k))
                if got != want:
                    failures.append(("essential set closed form", n, k, mode))
    for n in (1, 2, 3, 4):
        alg = deformed.DeformedAlgebra(_random_params(n, rng, "gen"))
        if deformed.orbit_tangent_rank(alg) != n * (n + 1) // 2:
            failures.append(("orbit tangent rank", n))
    return failures


def criterion_9(seed: int = 0) -> CriterionResult:
    start = time.perf_counter()
    failures = deformed_suite(seed)
    return _finish(9, "deformed Lie algebra suite", start, failures, {})


# 10 ------------------------------------------------------------------------


def criterion_10(seed: int = 0) -> CriterionResult:
    start = time.perf_counter()
    failures, pairs_checked = [], 0
    dims: set = set()
    for n in range(1, 5):
        for N in range(1, 5):
            dims.add((N,) * n)
        for d in itertools.product(range(4), repeat=n):
            if n <= 3:
                dims.add(d)
    for d in sorted(dims):
        n = len(d)
        classes = list(quiver.iter_classes(n, d))
        ranks = [quiver.mult_to_ranks(c).values() for c in classes]
        profiles = [quiver.hom_profile(c) for c in classes]
        for (ra, pa), (rb, pb) in itertools.product(zip(ranks, profiles), repeat=2):
            by_rank = all(x >= y for x, y in zip(ra, rb))
            by_hom = all(x <= y for x, y in zip(pa, pb))
            pairs_checked += 1
            if by_rank != by_hom:
                failures.append((d, ra, rb))
    return _finish(10, "degeneration order: rank order vs. Hom dimensions", start, failures,
                   {"pairs": pairs_checked})


CRITERIA: dict[int, Callable[..., CriterionResult]] = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
    9: criterion_9,
    10: criterion_10,
}


def run_all(seed: int = 0, only=None) -> list[CriterionResult]:
    out = []
    for number, fn in CRITERIA.items():
        if only and number not in only:
            continue
        try:
            out.append(fn(seed))
        except Exception as exc:  # noqa: BLE001 - a crash is a failed criterion
            out.append(CriterionResult(number, fn.__name__, False, 0.0, [f"{type(exc).__name__}: {exc}"]))
    return out
