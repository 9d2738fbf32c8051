"""Exact rational linear algebra.

Matrices are plain tuples of row tuples holding :class:`fractions.Fraction`
(ints are accepted on input and promoted).  Everything here is pure; callers
never see mutable state.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Hashable, Iterable, Sequence

Matrix = tuple  # tuple[tuple[Fraction, ...], ...]
Vector = tuple  # tuple[Fraction, ...]


def matrix(rows: Iterable[Iterable]) -> Matrix:
    """Build an immutable rational matrix from nested iterables."""
    out = tuple(tuple(Fraction(x) for x in row) for row in rows)
    if out and any(len(r) != len(out[0]) for r in out):
        raise ValueError("ragged matrix")
    return out


def zeros(rows: int, cols: int) -> Matrix:
    z = Fraction(0)
    return tuple((z,) * cols for _ in range(rows))


def identity(size: int) -> Matrix:
    return tuple(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(size))
        for i in range(size)
    )


def shape(m: Matrix) -> tuple[int, int]:
    return len(m), (len(m[0]) if m else 0)


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m)) if m else ()


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if a and b and len(a[0]) != len(b):
        raise ValueError("shape mismatch in matmul")
    bt = transpose(b)
    return tuple(
        tuple(sum((x * y for x, y in zip(row, col) if x and y), Fraction(0)) for col in bt)
        for row in a
    )


def matvec(a: Matrix, v: Sequence) -> Vector:
    return tuple(sum((x * y for x, y in zip(row, v) if x and y), Fraction(0)) for row in a)


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(c, a: Matrix) -> Matrix:
    c = Fraction(c)
    return tuple(tuple(c * x for x in row) for row in a)


def is_zero(m: Matrix) -> bool:
    return all(x == 0 for row in m for x in row)


def _rref(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form in place; returns (rows, pivot columns)."""
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        pr = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], pr)]
        pivots.append(c)
        r += 1
    return rows, pivots


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    nrows, ncols = shape(m)
    rows, piv = _rref([list(r) for r in m], ncols)
    return tuple(tuple(r) for r in rows), tuple(piv)


def _int_rank(rows: list[list[int]], ncols: int) -> int:
    # fraction-free elimination with content removal
    rank = 0
    rows = [r for r in rows if any(r)]
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank]
        pc = p[c]
        for i in range(rank + 1, len(rows)):
            x = rows[i][c]
            if x:
                row = [pc * a - x * b for a, b in zip(rows[i], p)]
                g = 0
                for a in row:
                    if a:
                        g = _gcd(g, a)
                        if g == 1:
                            break
                if g > 1:
                    row = [a // g for a in row]
                rows[i] = row
        rank += 1
        if rank == len(rows):
            break
    return rank


def _gcd(a: int, b: int) -> int:
    from math import gcd

    return gcd(a, b)


def _integer_rows(m: Matrix) -> list[list[int]]:
    from math import lcm

    out = []
    for row in m:
        den = 1
        for x in row:
            if x.denominator != 1:
                den = lcm(den, x.denominator)
        out.append([int(x * den) for x in row])
    return out


def rank(m: Matrix) -> int:
    """Rank over the rationals (denominators cleared, fraction-free elimination)."""
    nrows, ncols = shape(m)
    if nrows == 0 or ncols == 0:
        return 0
    return _int_rank(_integer_rows(m), ncols)


def kernel_basis(m: Matrix, ncols: int | None = None) -> list[Vector]:
    """Basis of the right null space ``{v : m v = 0}``."""
    if ncols is None:
        ncols = shape(m)[1]
    if not m:
        return [tuple(Fraction(int(i == j)) for i in range(ncols)) for j in range(ncols)]
    rows, piv = _rref([list(r) for r in m], ncols)
    pivset = set(piv)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for r, pc in enumerate(piv):
            v[pc] = -rows[r][free]
        basis.append(tuple(v))
    return basis


def solve_span_membership(v: Sequence, basis: Sequence[Sequence]) -> tuple[bool, tuple[Fraction, ...] | None]:
    """Decide ``v in span(basis)``; on success also return coordinates."""
    v = tuple(Fraction(x) for x in v)
    if not basis:
        return (all(x == 0 for x in v), () if all(x == 0 for x in v) else None)
    if any(len(b) != len(v) for b in basis):
        raise ValueError("vectors must have equal length")
    k = len(basis)
    # augmented system: columns are basis vectors, last column is v
    aug = [[Fraction(basis[j][i]) for j in range(k)] + [v[i]] for i in range(len(v))]
    rows, piv = _rref(aug, k + 1)
    if k in piv:
        return False, None
    coords = [Fraction(0)] * k
    for r, pc in enumerate(piv):
        coords[pc] = rows[r][k]
    return True, tuple(coords)


def det(m: Matrix) -> Fraction:
    n, c = shape(m)
    if n != c:
        raise ValueError("determinant of a non-square matrix")
    rows = [list(r) for r in m]
    d = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if rows[i][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            d = -d
        p = rows[col][col]
        d *= p
        for i in range(col + 1, n):
            f = rows[i][col] / p
            if f:
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[col])]
    return d


def inverse(m: Matrix) -> Matrix:
    n, c = shape(m)
    if n != c:
        raise ValueError("inverse of a non-square matrix")
    aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(m)]
    rows, piv = _rref(aug, n)
    if tuple(piv) != tuple(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return tuple(tuple(r[n:]) for r in rows)


def subsets(size: int, k: int) -> list[tuple[int, ...]]:
    """k-subsets of ``range(size)`` in lexicographic order."""
    return list(combinations(range(size), k))


def wedge_power(m: Matrix, k: int) -> Matrix:
    """Matrix of the induced map on the k-th exterior power (lex basis)."""
    n, c = shape(m)
    if n != c:
        raise ValueError("wedge_power expects a square matrix")
    if not 1 <= k <= n:
        raise ValueError(f"k={k} out of range 1..{n}")
    idx = subsets(n, k)
    return tuple(
        tuple(det(tuple(tuple(m[i][j] for j in cols) for i in rows)) for cols in idx)
        for rows in idx
    )


def rank_mod_p(m: Sequence[Sequence[int]], p: int) -> int:
    rows = [[x % p for x in r] for r in m]
    rk = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rk, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        inv = pow(rows[rk][c], -1, p)
        rows[rk] = [(x * inv) % p for x in rows[rk]]
        for i in range(len(rows)):
            if i != rk and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[rk])]
        rk += 1
    return rk


class EchelonSpace:
    """Incrementally maintained span of sparse rational vectors.

    Vectors are dicts ``{label: Fraction}``; labels must be mutually
    comparable so that pivots are chosen deterministically (largest label).
    """

    def __init__(self) -> None:
        self._rows: dict[Hashable, dict] = {}

    def __len__(self) -> int:
        return len(self._rows)

    def reduce(self, vec: dict) -> dict:
        v = {k: Fraction(x) for k, x in vec.items() if x}
        # rows vanish on every pivot but their own, so one pass suffices
        hits = [(k, v[k]) for k in v if k in self._rows]
        for key, c in hits:
            for k2, x in self._rows[key].items():
                nv = v.get(k2, 0) - c * x
                if nv:
                    v[k2] = nv
                else:
                    v.pop(k2, None)
        return v

    def add(self, vec: dict) -> bool:
        """Insert ``vec``; return True iff it enlarged the span."""
        v = self.reduce(vec)
        if not v:
            return False
        piv = max(v)
        inv = 1 / v[piv]
        v = {k: x * inv for k, x in v.items()}
        # keep rows fully reduced on their pivots
        for key, row in self._rows.items():
            c = row.get(piv)
            if c:
                for k2, x in v.items():
                    nv = row.get(k2, 0) - c * x
                    if nv:
                        row[k2] = nv
                    else:
                        row.pop(k2, None)
        self._rows[piv] = v
        return True

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)

    def vectors(self) -> list[dict]:
        """The reduced basis, ordered by pivot."""
        return [dict(self._rows[k]) for k in sorted(self._rows)]
