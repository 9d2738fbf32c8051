"""The transversal slice through the flat-irreducible locus for complete flags."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from . import linalg
from .quiver import MatrixRep


@dataclass(frozen=True)
class SliceParams:
    """Parameters lambda_{p,q}, 2 <= p <= q <= n, for n vertices and N = n + 1.

    ``value`` applies the fixed extension lambda_{1,1} = lambda_{n+1,n+1} = 1
    and lambda = 0 at every other unlisted pair.
    """

    n: int
    lam: Mapping[tuple[int, int], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (p, q), v in dict(self.lam).items():
            if not 2 <= p <= q <= self.n:
                raise ValueError(f"slice parameter ({p},{q}) outside 2 <= p <= q <= {self.n}")
            v = Fraction(v)
            if v:
                clean[(p, q)] = v
        object.__setattr__(self, "lam", dict(sorted(clean.items())))

    def __hash__(self):
        return hash((self.n, tuple(self.lam.items())))

    @staticmethod
    def positions(n: int) -> list[tuple[int, int]]:
        return [(p, q) for p in range(2, n + 1) for q in range(p, n + 1)]

    def value(self, p: int, q: int) -> Fraction:
        if (p, q) in ((1, 1), (self.n + 1, self.n + 1)):
            return Fraction(1)
        return self.lam.get((p, q), Fraction(0))

    def to_json(self) -> dict:
        return {
            "entries": [[p, q, v.numerator, v.denominator] for (p, q), v in self.lam.items()]
        }

    @classmethod
    def from_json(cls, n: int, data: Mapping) -> "SliceParams":
        return cls(n, {(int(p), int(q)): Fraction(int(a), int(b)) for p, q, a, b in data.get("entries", [])})


def slice_maps(params: SliceParams) -> list:
    n = params.n
    size = n + 1
    maps = []
    for i in range(1, n):
        rows = []
        for p in range(1, size + 1):
            row = []
            for q in range(1, size + 1):
                if p == q and p != i + 1:
                    row.append(Fraction(1))
                elif 2 <= p <= i + 1 <= q <= n:
                    row.append(params.lam.get((p, q), Fraction(0)))
                else:
                    row.append(Fraction(0))
            rows.append(tuple(row))
        maps.append(tuple(rows))
    return maps


def slice_matrices(params: SliceParams) -> MatrixRep:
    return MatrixRep.from_maps(slice_maps(params), (params.n + 1,) * params.n)


def composite_formula(params: SliceParams):
    """Closed form of f_{n-1} ... f_1: (b - a + 1) lambda_{a,b} on 2 <= a <= b <= n,
    ones at (1,1) and (n+1,n+1)."""
    n = params.n
    size = n + 1
    out = [[Fraction(0)] * size for _ in range(size)]
    out[0][0] = Fraction(1)
    out[n][n] = Fraction(1)
    for (a, b), v in params.lam.items():
        out[a - 1][b - 1] = (b - a + 1) * v
    return tuple(tuple(r) for r in out)


def composite(params: SliceParams):
    maps = slice_maps(params)
    out = linalg.identity(params.n + 1)
    for f in maps:
        out = linalg.matmul(f, out)
    return out
