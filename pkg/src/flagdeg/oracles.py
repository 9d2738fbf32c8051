"""Independent dimension oracles for irreducible sl_N modules.

Used by the test suite and by ``flagdeg verify`` only; no algorithm in the
package consults them.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Sequence


def column_shape_to_partition(col_lengths: Sequence[int]) -> list[int]:
    """Row lengths of the Young diagram with the given column lengths."""
    cols = sorted((c for c in col_lengths if c > 0), reverse=True)
    if not cols:
        return []
    return [sum(1 for c in cols if c >= i) for i in range(1, cols[0] + 1)]


def weight_to_columns(mu: Sequence[int], sizes: Sequence[int] | None = None) -> list[int]:
    """Column lengths for ``sum m_k omega_{sizes[k]}`` (sizes default to 1..n)."""
    if sizes is None:
        sizes = range(1, len(mu) + 1)
    out: list[int] = []
    for m, k in zip(mu, sizes):
        out += [k] * m
    return out


def hook_content_dim(partition: Sequence[int], N: int) -> int:
    """Number of SSYT with entries in [N], by the hook-content formula."""
    lam = [x for x in partition if x > 0]
    if len(lam) > N:
        return 0
    conj = [sum(1 for x in lam if x > j) for j in range(lam[0])] if lam else []
    val = Fraction(1)
    for i, row in enumerate(lam):
        for j in range(row):
            hook = (row - j - 1) + (conj[j] - i - 1) + 1
            val *= Fraction(N + j - i, hook)
    assert val.denominator == 1
    return int(val)


def ssyt_count(partition: Sequence[int], N: int) -> int:
    """Number of SSYT with entries in [N], by filling rows one at a time."""
    lam = [x for x in partition if x > 0]
    if not lam:
        return 1
    if len(lam) > N:
        return 0

    def rows_under(prev, length):
        # weakly increasing rows of the given length, strictly below ``prev``
        def rec(pos, lo, acc):
            if pos == length:
                yield tuple(acc)
                return
            start = max(lo, (prev[pos] + 1) if prev is not None else 1)
            for v in range(start, N + 1):
                acc.append(v)
                yield from rec(pos + 1, v, acc)
                acc.pop()

        yield from rec(0, 1, [])

    def count(idx, prev):
        if idx == len(lam):
            return 1
        return sum(count(idx + 1, row) for row in rows_under(prev, lam[idx]))

    return count(0, None)


def weyl_dim(mu: Sequence[int], N: int, sizes: Sequence[int] | None = None) -> int:
    """dim V(mu) for sl_N, mu given by multiplicities of fundamental weights."""
    return hook_content_dim(column_shape_to_partition(weight_to_columns(mu, sizes)), N)


def wedge_dim(N: int, k: int) -> int:
    return comb(N, k)
