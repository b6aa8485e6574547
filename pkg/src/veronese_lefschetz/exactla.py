"""Exact rational matrices: rank, ordered pivot extraction, products.

Ranks are computed over Q.  The default path is fraction-free (Bareiss)
elimination over the integers after clearing denominators, run separately on
each connected block of the matrix.  ``method="auto"`` first tries to
certify full rank modulo a few word-size primes: a matrix whose rank mod p
equals min(rows, cols) has that rank over Q, because reduction mod p can
only lower rank.  Anything short of full rank falls back to the exact path,
so ``auto`` never returns an unverified answer.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from numbers import Rational
from typing import Iterable, Sequence

import numpy as np

# Primes below 2**31 so that products of residues fit in int64.
PRIMES = (2147483647, 2147483629, 2147483587)
_INT64_SAFE = 2**62


def _normalize(x):
    if isinstance(x, bool):
        raise TypeError("boolean matrix entry")
    if isinstance(x, int):
        return x
    if isinstance(x, Rational):
        x = Fraction(x)
        return x.numerator if x.denominator == 1 else x
    raise TypeError(f"non-rational matrix entry {x!r}")


class RationalMatrix:
    """Dense, immutable matrix of exact rationals (ints where integral)."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Iterable[Sequence], cols: int | None = None):
        rows = tuple(tuple(_normalize(x) for x in row) for row in data)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged matrix")
            if cols is not None and cols != width:
                raise ValueError("column count mismatch")
        else:
            width = cols or 0
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", width)
        object.__setattr__(self, "_data", rows)

    def __setattr__(self, name, value):
        raise AttributeError("RationalMatrix is immutable")

    def __reduce__(self):
        return RationalMatrix, (self._data, self.cols)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def from_columns(cls, columns: dict[int, dict[int, int]], rows: int, cols: int) -> "RationalMatrix":
        """Build from sparse columns ``{col: {row: value}}``."""
        data = [[0] * cols for _ in range(rows)]
        for j, col in columns.items():
            for i, v in col.items():
                data[i][j] = v
        return cls(data, cols=cols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def tolist(self) -> list[list]:
        return [list(r) for r in self._data]

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalMatrix) and self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.shape, self._data))

    def __repr__(self) -> str:
        return f"RationalMatrix({self.rows}x{self.cols})"

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(zip(*self._data), cols=self.rows) if self.rows else RationalMatrix([], cols=0)

    @property
    def T(self) -> "RationalMatrix":
        return self.transpose()

    def is_integral(self) -> bool:
        return all(isinstance(x, int) for row in self._data for x in row)

    def max_abs(self) -> int:
        return max((abs(x) for row in self._data for x in row), default=0)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        if self.is_integral() and other.is_integral():
            bound = self.max_abs() * other.max_abs() * max(self.cols, 1)
            if bound < _INT64_SAFE:
                a = np.array(self._data, dtype=np.int64).reshape(self.rows, self.cols)
                b = np.array(other._data, dtype=np.int64).reshape(other.rows, other.cols)
                return RationalMatrix((a @ b).tolist(), cols=other.cols)
        out = []
        for row in self._data:
            acc = [0] * other.cols
            for k, a in enumerate(row):
                if a:
                    brow = other._data[k]
                    for j, b in enumerate(brow):
                        if b:
                            acc[j] += a * b
            out.append(acc)
        return RationalMatrix(out, cols=other.cols)

    def integer_rows(self) -> list[list[int]]:
        """Rows scaled by their denominators' lcm; row scaling preserves rank and pivots."""
        out = []
        for row in self._data:
            den = lcm(*(x.denominator for x in row if isinstance(x, Fraction))) if row else 1
            out.append([int(x * den) for x in row])
        return out


def _components(rows: list[list[int]], ncols: int) -> list[tuple[list[int], list[int]]]:
    """Connected blocks of the bipartite row/column support graph."""
    parent = list(range(len(rows) + ncols))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    nrows = len(rows)
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if v:
                a, b = find(i), find(nrows + j)
                if a != b:
                    parent[a] = b
    groups: dict[int, tuple[list[int], list[int]]] = {}
    for i, row in enumerate(rows):
        if any(row):
            groups.setdefault(find(i), ([], []))[0].append(i)
    for j in range(ncols):
        root = find(nrows + j)
        if root in groups:
            groups[root][1].append(j)
    return list(groups.values())


def bareiss_rank(rows: list[list[int]]) -> int:
    """Fraction-free Gaussian elimination on an integer matrix (rows are consumed)."""
    a = [r[:] for r in rows if any(r)]
    if not a:
        return 0
    ncols = len(a[0])
    if len(a) > ncols:
        a = [list(c) for c in zip(*a)]
        ncols = len(a[0])
    m = len(a)
    prev = 1
    rank = 0
    for c in range(ncols):
        if rank == m:
            break
        piv = next((i for i in range(rank, m) if a[i][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        prow = a[rank]
        p = prow[c]
        for i in range(rank + 1, m):
            row = a[i]
            f = row[c]
            if f:
                for j in range(c + 1, ncols):
                    row[j] = (p * row[j] - f * prow[j]) // prev
            else:
                for j in range(c + 1, ncols):
                    if row[j]:
                        row[j] = (p * row[j]) // prev
            row[c] = 0
        prev = p
        rank += 1
    return rank


def rank_mod_p(rows: list[list[int]], p: int) -> int:
    """Rank over GF(p) for p < 2**31 using vectorized int64 elimination."""
    if not rows or not rows[0]:
        return 0
    a = np.array([[x % p for x in r] for r in rows], dtype=np.int64)
    if a.shape[0] > a.shape[1]:
        a = np.ascontiguousarray(a.T)
    m, n = a.shape
    rank = 0
    for c in range(n):
        if rank == m:
            break
        nz = np.flatnonzero(a[rank:, c])
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, c]), p - 2, p)
        a[rank, c:] = (a[rank, c:] * inv) % p
        below = rank + 1 + np.flatnonzero(a[rank + 1:, c])
        if below.size:
            factors = a[below, c][:, None]
            a[below, c:] = (a[below, c:] - (factors * a[rank, c:][None, :]) % p) % p
        rank += 1
    return rank


def rank(M: RationalMatrix, method: str = "exact") -> int:
    """Exact rank over Q.

    ``method="exact"`` runs Bareiss elimination per connected block;
    ``method="auto"`` tries certified full rank modulo primes first.
    """
    if method not in ("exact", "auto"):
        raise ValueError(f"unknown rank method {method!r}")
    if M.rows == 0 or M.cols == 0:
        return 0
    rows = M.integer_rows()
    total = 0
    for ridx, cidx in _components(rows, M.cols):
        block = [[rows[i][j] for j in cidx] for i in ridx]
        target = min(len(ridx), len(cidx))
        if method == "auto" and target > 8:
            if any(rank_mod_p(block, p) == target for p in PRIMES[:2]):
                total += target
                continue
        total += bareiss_rank(block)
    return total


def rational_rank(M: RationalMatrix) -> int:
    """Plain Gauss-Jordan elimination over Fractions; an independent check on :func:`rank`."""
    a = [[Fraction(x) for x in row] for row in M.tolist()]
    r = 0
    for c in range(M.cols):
        piv = next((i for i in range(r, M.rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, M.rows):
            if a[i][c] != 0:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == M.rows:
            break
    return r


def row_reduce_pivots(M: RationalMatrix, column_order: Sequence[int]) -> set[int]:
    """Pivot columns of Gaussian elimination scanning columns in ``column_order``.

    With columns ranked by the order, the result is the set of leading
    positions of the row space.
    """
    order = list(column_order)
    if sorted(order) != list(range(M.cols)):
        raise ValueError("column_order must be a permutation of all columns")
    rows = [[row[j] for j in order] for row in M.integer_rows()]
    rows = [r for r in rows if any(r)]
    pivots = set()
    prev = 1
    k = 0
    ncols = len(order)
    for c in range(ncols):
        if k == len(rows):
            break
        piv = next((i for i in range(k, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[k], rows[piv] = rows[piv], rows[k]
        prow = rows[k]
        p = prow[c]
        for i in range(k + 1, len(rows)):
            row = rows[i]
            f = row[c]
            for j in range(c + 1, ncols):
                row[j] = (p * row[j] - f * prow[j]) // prev
            row[c] = 0
        prev = p
        pivots.add(order[c])
        k += 1
    return pivots
