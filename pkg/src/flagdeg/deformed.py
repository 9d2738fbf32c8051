"""Deformed Lie algebras on the transversal slice and their cyclic modules."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .errors import InvariantViolation, guard
from .quiver import QuiverContext
from .slice import SliceParams, composite, composite_formula, slice_maps, slice_matrices

__all__ = [
    "DeformedAlgebra",
    "SliceParams",
    "bracket",
    "build_module",
    "essential_monomials",
    "group_element",
    "group_law_coefficient",
    "orbit_tangent_rank",
    "phi",
    "slice_matrices",
]


def unit(size: int, a: int, b: int):
    """Matrix unit E_{a,b} (1-based)."""
    return tuple(
        tuple(Fraction(int(p == a - 1 and q == b - 1)) for q in range(size)) for p in range(size)
    )


class DeformedAlgebra:
    """(n+1) x (n+1) matrices with [x, y]_t = x F y - y F x, F the slice composite."""

    def __init__(self, params: SliceParams):
        self.params = params
        self.n = params.n
        self.size = params.n + 1
        self.maps = slice_maps(params)
        self.F = composite(params)
        if self.F != composite_formula(params):
            raise InvariantViolation(f"slice composite differs from its closed form for {params}")
        # prefix[i] = f_{i-1} ... f_1 and suffix[i] = f_{n-1} ... f_i (1-based i)
        ident = linalg.identity(self.size)
        self._prefix = [ident]
        for f in self.maps:
            self._prefix.append(linalg.matmul(f, self._prefix[-1]))
        self._suffix = [None] * (self.n + 1)
        self._suffix[self.n] = ident
        for i in range(self.n - 1, 0, -1):
            self._suffix[i] = linalg.matmul(self._suffix[i + 1], self.maps[i - 1])

    def lower_generators(self) -> list[tuple[int, int]]:
        """E_{a,b}, a > b, in increasing order: larger a - b first, then smaller a."""
        gens = [(a, b) for a in range(1, self.size + 1) for b in range(1, a)]
        return sorted(gens, key=lambda ab: (-(ab[0] - ab[1]), ab[0]))


def bracket(alg: DeformedAlgebra, x, y):
    return linalg.mat_sub(linalg.matmul(linalg.matmul(x, alg.F), y), linalg.matmul(linalg.matmul(y, alg.F), x))


def phi(alg: DeformedAlgebra, x) -> tuple:
    """(Phi(x)_1, ..., Phi(x)_n) with Phi(x)_i = f_{i-1}...f_1 x f_{n-1}...f_i."""
    return tuple(
        linalg.matmul(linalg.matmul(alg._prefix[i - 1], x), alg._suffix[i]) for i in range(1, alg.n + 1)
    )


def is_endomorphism(alg: DeformedAlgebra, comps: Sequence) -> bool:
    return all(
        linalg.matmul(alg.maps[i], comps[i]) == linalg.matmul(comps[i + 1], alg.maps[i])
        for i in range(alg.n - 1)
    )


def compose(a: Sequence, b: Sequence) -> tuple:
    return tuple(linalg.matmul(x, y) for x, y in zip(a, b))


def group_law_coefficient(alg: DeformedAlgebra, a: int, b: int) -> Fraction:
    """c with Phi(E_ab)^2 = c Phi(E_ab); it equals the entry F_{b,a}."""
    return alg.F[b - 1][a - 1]


def excluded_parameter(alg: DeformedAlgebra, a: int, b: int) -> Fraction | None:
    c = group_law_coefficient(alg, a, b)
    return None if c == 0 else -1 / c


def group_element(alg: DeformedAlgebra, a: int, b: int, x) -> tuple:
    """Id + x Phi(E_ab), composing as (x, y) -> x + y + c x y."""
    if a == b or not (1 <= a <= alg.size and 1 <= b <= alg.size):
        raise ValueError("need distinct indices in range")
    x = Fraction(x)
    bad = excluded_parameter(alg, a, b)
    if bad is not None and x == bad:
        raise ValueError(f"x = {bad} is excluded: Id + x Phi(E_{a},{b}) is not invertible")
    ident = linalg.identity(alg.size)
    return tuple(linalg.mat_add(ident, linalg.mat_scale(x, m)) for m in phi(alg, unit(alg.size, a, b)))


# ----------------------------------------------------------------- modules


def _act_on_wedge(mat, subset: tuple) -> dict:
    """Derivation action of ``mat`` on v_{s_1} ^ ... ^ v_{s_k} (0-based indices)."""
    out: dict = {}
    for pos, s in enumerate(subset):
        for row in range(len(mat)):
            c = mat[row][s]
            if not c:
                continue
            new = list(subset)
            new[pos] = row
            if len(set(new)) != len(new):
                continue
            inv = sum(1 for i, j in itertools.combinations(new, 2) if i > j)
            key = tuple(sorted(new))
            out[key] = out.get(key, 0) + (-c if inv % 2 else c)
    return out


@dataclass
class CyclicModule:
    mu: tuple
    factors: tuple  # wedge degree of each tensor factor
    cyclic: dict
    basis: list
    space: linalg.EchelonSpace

    @property
    def dim(self) -> int:
        return len(self.basis)


class ModuleAction:
    """Action of Phi(x) on tensor products of wedge powers (Leibniz rule)."""

    def __init__(self, alg: DeformedAlgebra, mu: Sequence[int]):
        self.alg = alg
        self.mu = tuple(mu)
        if len(self.mu) != alg.n or any(m < 0 for m in self.mu):
            raise ValueError("mu needs n non-negative entries")
        self.factors = tuple(k for k in range(1, alg.n + 1) for _ in range(self.mu[k - 1]))
        self._ops: dict = {}

    def cyclic_vector(self) -> dict:
        return {tuple(tuple(range(k)) for k in self.factors): Fraction(1)}

    def operator(self, a: int, b: int) -> tuple:
        if (a, b) not in self._ops:
            self._ops[(a, b)] = phi(self.alg, unit(self.alg.size, a, b))
        return self._ops[(a, b)]

    def apply(self, comps: Sequence, vec: dict) -> dict:
        out: dict = {}
        cache: dict = {}
        for key, c in vec.items():
            for slot, k in enumerate(self.factors):
                sub = key[slot]
                if (k, sub) not in cache:
                    cache[(k, sub)] = _act_on_wedge(comps[k - 1], sub)
                for new, d in cache[(k, sub)].items():
                    nk = key[:slot] + (new,) + key[slot + 1 :]
                    out[nk] = out.get(nk, 0) + c * d
        return {k: v for k, v in out.items() if v}

    def apply_generator(self, a: int, b: int, vec: dict) -> dict:
        return self.apply(self.operator(a, b), vec)


MAX_MODULE_N = 4
MAX_MODULE_DEGREE = 3


def _module_guard(alg: DeformedAlgebra, mu: Sequence[int]) -> None:
    guard(
        alg.n <= MAX_MODULE_N and sum(mu) <= MAX_MODULE_DEGREE,
        f"module guard: n <= {MAX_MODULE_N}, total degree <= {MAX_MODULE_DEGREE}",
    )


def build_module(alg: DeformedAlgebra, mu: Sequence[int]) -> CyclicModule:
    """Span of v_mu under the operators Phi(E_ab), a > b."""
    _module_guard(alg, mu)
    act = ModuleAction(alg, mu)
    start = act.cyclic_vector()
    space = linalg.EchelonSpace()
    space.add(start)
    basis = [start]
    queue = [start]
    gens = alg.lower_generators()
    while queue:
        vec = queue.pop()
        for a, b in gens:
            img = act.apply_generator(a, b, vec)
            if img and space.add(img):
                basis.append(img)
                queue.append(img)
    return CyclicModule(act.mu, act.factors, start, basis, space)


def exponent_of(word: Sequence[tuple[int, int]]) -> dict:
    s: dict = {}
    for ab in word:
        s[ab] = s.get(ab, 0) + 1
    return dict(sorted(s.items()))


def ordered_word(alg: DeformedAlgebra, s: dict) -> tuple:
    """The ordered product E^s: factors decrease from left to right."""
    order = alg.lower_generators()
    word = []
    for ab in reversed(order):
        word += [ab] * s.get(ab, 0)
    return tuple(word)


def apply_word(act: ModuleAction, word: Sequence[tuple[int, int]], vec: dict) -> dict:
    for ab in reversed(word):
        vec = act.apply_generator(ab[0], ab[1], vec)
        if not vec:
            break
    return vec


def _words(ngens: int, length: int):
    """Rank sequences r_1 >= ... >= r_L in increasing monomial order: compare
    the rightmost factor first."""
    combos = itertools.combinations_with_replacement(range(ngens), length)
    # each combo is non-decreasing; reverse it to read left to right
    return sorted((tuple(reversed(c)) for c in combos), key=lambda w: tuple(reversed(w)))


def essential_monomials(alg: DeformedAlgebra, mu: Sequence[int], max_length: int | None = None) -> list[dict]:
    """Greedy essential exponents in increasing monomial order."""
    _module_guard(alg, mu)
    target = build_module(alg, mu).dim
    act = ModuleAction(alg, mu)
    gens = alg.lower_generators()
    if max_length is None:
        # each factor of degree k is killed by any k(n+1-k) + 1 lowering steps
        max_length = sum(k * (alg.size - k) for k in act.factors)
    space = linalg.EchelonSpace()
    memo: dict = {(): act.cyclic_vector()}
    found: list[dict] = []
    for length in range(0, max_length + 1):
        any_alive = False
        for word in _words(len(gens), length) if length else [()]:
            if word not in memo:
                rest = memo.get(word[1:], {})
                g = gens[word[0]]
                memo[word] = act.apply_generator(g[0], g[1], rest) if rest else {}
            vec = memo[word]
            if not vec:
                continue
            any_alive = True
            if space.add(vec):
                found.append(exponent_of(gens[i] for i in word))
                if len(found) == target:
                    return found
        if not any_alive:
            break
    raise InvariantViolation(f"essential monomials span {len(found)} < dim {target} for mu={tuple(mu)}")


def fundamental_essential_closed_form(n: int, k: int) -> list[dict]:
    """E_{a_1 b_1} ... E_{a_L b_L} with b_1 < ... < b_L <= k < a_L < ... < a_1."""
    size = n + 1
    out = []
    for L in range(0, min(k, size - k) + 1):
        for bs in itertools.combinations(range(1, k + 1), L):
            for as_ in itertools.combinations(range(k + 1, size + 1), L):
                # a's decrease while b's increase
                pairs_ = list(zip(reversed(as_), bs))
                out.append(exponent_of(pairs_))
    return out


def minkowski_set(sets: Sequence[Sequence[dict]]) -> list[dict]:
    out = {(): {}}
    for group in sets:
        nxt = {}
        for s in out.values():
            for t in group:
                merged = dict(s)
                for k, v in t.items():
                    merged[k] = merged.get(k, 0) + v
                key = tuple(sorted(merged.items()))
                nxt[key] = dict(sorted(merged.items()))
        out = nxt
    return [out[k] for k in sorted(out)]


def minkowski_rank(alg: DeformedAlgebra, mu: Sequence[int]) -> tuple[int, int]:
    """(|S(mu)|, rank of {E^s v_mu : s in S(mu)}) with S(mu) the Minkowski sum of
    the fundamental essential sets."""
    act = ModuleAction(alg, mu)
    groups = [essential_monomials(alg, tuple(int(i == k - 1) for i in range(alg.n))) for k in act.factors]
    svecs = minkowski_set(groups)
    space = linalg.EchelonSpace()
    start = act.cyclic_vector()
    for s in svecs:
        space.add(apply_word(act, ordered_word(alg, s), start))
    return len(svecs), len(space)


def orbit_tangent_rank(alg: DeformedAlgebra, ctx: QuiverContext | None = None) -> int:
    """Rank of x -> (lower-left k x (N-k) blocks of Phi(x)_k)_k on the span of E_ab, a > b."""
    n = alg.n
    guard(n <= 5, "orbit_tangent_rank guard: n <= 5")
    if ctx is not None and (ctx.e != tuple(range(1, n + 1)) or ctx.N != n + 1):
        raise ValueError("orbit_tangent_rank is defined at the complete coordinate flag")
    rows = []
    for a, b in alg.lower_generators():
        comps = phi(alg, unit(alg.size, a, b))
        row = []
        for k in range(1, n + 1):
            m = comps[k - 1]
            row += [m[p][q] for p in range(k, alg.size) for q in range(k)]
        rows.append(tuple(row))
    return linalg.rank(tuple(rows))


def phi_kernel_on_lower(alg: DeformedAlgebra) -> int:
    """Dimension of the kernel of Phi restricted to strictly lower-triangular matrices."""
    rows = []
    for a, b in alg.lower_generators():
        rows.append(tuple(x for m in phi(alg, unit(alg.size, a, b)) for row in m for x in row))
    return len(rows) - linalg.rank(tuple(rows))


def b_plus_preserves_line(alg: DeformedAlgebra, mu: Sequence[int]) -> bool:
    """Phi(E_ab) v_mu is a multiple of v_mu for every a <= b."""
    act = ModuleAction(alg, mu)
    v = act.cyclic_vector()
    (key,) = v
    for a in range(1, alg.size + 1):
        for b in range(a, alg.size + 1):
            img = act.apply_generator(a, b, v)
            if any(k != key for k in img):
                return False
    return True
