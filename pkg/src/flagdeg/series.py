"""Truncated multivariate integer power series."""

from __future__ import annotations

from itertools import product
from typing import Iterator, Mapping, Sequence


class MultiSeries:
    """Series in ``x_1..x_k`` keeping only exponents inside the box ``0..trunc[i]``."""

    __slots__ = ("trunc", "_coeffs")

    def __init__(self, trunc: Sequence[int], coeffs: Mapping[tuple, int] | None = None):
        self.trunc = tuple(int(t) for t in trunc)
        self._coeffs: dict[tuple, int] = {}
        for exp, c in (coeffs or {}).items():
            exp = tuple(exp)
            if len(exp) != len(self.trunc):
                raise ValueError("exponent of wrong length")
            if c and self.in_box(exp):
                self._coeffs[exp] = int(c)

    @property
    def nvars(self) -> int:
        return len(self.trunc)

    def in_box(self, exp: Sequence[int]) -> bool:
        return all(0 <= a <= t for a, t in zip(exp, self.trunc))

    @classmethod
    def one(cls, trunc: Sequence[int]) -> "MultiSeries":
        return cls(trunc, {(0,) * len(trunc): 1})

    def box(self) -> Iterator[tuple]:
        return product(*[range(t + 1) for t in self.trunc])

    def __getitem__(self, exp) -> int:
        return self._coeffs.get(tuple(exp), 0)

    def items(self):
        return sorted(self._coeffs.items())

    def __eq__(self, other) -> bool:
        return isinstance(other, MultiSeries) and self.trunc == other.trunc and self._coeffs == other._coeffs

    def __repr__(self):
        return f"MultiSeries(trunc={self.trunc}, terms={len(self._coeffs)})"

    def __add__(self, other: "MultiSeries") -> "MultiSeries":
        self._check(other)
        out = dict(self._coeffs)
        for k, v in other._coeffs.items():
            out[k] = out.get(k, 0) + v
        return MultiSeries(self.trunc, out)

    def __mul__(self, other: "MultiSeries") -> "MultiSeries":
        self._check(other)
        out: dict[tuple, int] = {}
        for a, x in self._coeffs.items():
            for b, y in other._coeffs.items():
                exp = tuple(i + j for i, j in zip(a, b))
                if self.in_box(exp):
                    out[exp] = out.get(exp, 0) + x * y
        return MultiSeries(self.trunc, out)

    def times_geometric(self, step: Sequence[int]) -> "MultiSeries":
        """Multiply by ``1 / (1 - x^step)`` (``step`` non-zero, non-negative)."""
        step = tuple(step)
        if len(step) != self.nvars or any(s < 0 for s in step) or not any(step):
            raise ValueError("step must be a non-zero non-negative exponent")
        out: dict[tuple, int] = {}
        # box order is lexicographic, so exp - step is always visited first
        for exp in self.box():
            prev = tuple(a - s for a, s in zip(exp, step))
            v = self._coeffs.get(exp, 0)
            if all(p >= 0 for p in prev):
                v += out.get(prev, 0)
            if v:
                out[exp] = v
        return MultiSeries(self.trunc, out)

    def _check(self, other):
        if self.trunc != other.trunc:
            raise ValueError("series with different truncation boxes")

    def to_json(self) -> dict:
        return {"trunc": list(self.trunc), "coefficients": [[list(k), v] for k, v in self.items()]}


def geometric(trunc: Sequence[int], step: Sequence[int]) -> MultiSeries:
    return MultiSeries.one(trunc).times_geometric(step)
