"""Matrices of polynomials, determinants and ideals of minors."""

from __future__ import annotations

from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from .groebner import Ideal, unit_ideal
from .ring import Polynomial


class PolyMatrix:
    """Rectangular matrix with :class:`Polynomial` entries (immutable)."""

    __slots__ = ("rows", "nvars")

    def __init__(self, rows: Sequence[Sequence[Polynomial]], nvars: int | None = None):
        rows = tuple(tuple(r) for r in rows)
        if not rows or not rows[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged matrix")
        nvars = rows[0][0].nvars if nvars is None else nvars
        if any(f.nvars != nvars for r in rows for f in r):
            raise ValueError("entries live in different rings")
        self.rows = rows
        self.nvars = nvars

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[Polynomial]]) -> "PolyMatrix":
        cols = [tuple(c) for c in cols]
        return cls([tuple(c[i] for c in cols) for i in range(len(cols[0]))])

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> Tuple[Polynomial, ...]:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> List[Tuple[Polynomial, ...]]:
        return [self.column(j) for j in range(self.ncols)]

    def entries(self):
        for r in self.rows:
            yield from r

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix.from_columns(self.rows)

    def select(self, rows: Sequence[int], cols: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix([[self.rows[i][j] for j in cols] for i in rows], self.nvars)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in matrix product")
        zero = Polynomial.zero(self.nvars)
        out = []
        for r in self.rows:
            row = []
            for j in range(other.ncols):
                acc = zero
                for k, a in enumerate(r):
                    b = other.rows[k][j]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix(out, self.nvars)

    def is_zero(self) -> bool:
        return not any(self.entries())

    def min_order(self):
        return min(f.order() for f in self.entries())

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.rows == other.rows

    __hash__ = None

    def format(self, names=None) -> List[List[str]]:
        return [[f.format(names) for f in r] for r in self.rows]

    def __repr__(self):
        return f"PolyMatrix({self.format()})"


def _prefix_det(A: Sequence[Sequence[Polynomial]], rows: Tuple[int, ...], nvars: int, memo: Dict) -> Polynomial:
    """Determinant of ``A[rows, 0:len(rows)]`` by Laplace expansion on the last column."""
    k = len(rows)
    if k == 0:
        return Polynomial.one(nvars)
    hit = memo.get(rows)
    if hit is not None:
        return hit
    c = k - 1
    total = Polynomial.zero(nvars)
    for p, r in enumerate(rows):
        e = A[r][c]
        if not e:
            continue
        sub = _prefix_det(A, rows[:p] + rows[p + 1:], nvars, memo)
        if sub:
            term = e * sub
            total = total + term if (p + c) % 2 == 0 else total - term
    memo[rows] = total
    return total


def det(M: PolyMatrix) -> Polynomial:
    if M.nrows != M.ncols:
        raise ValueError("determinant of a non-square matrix")
    return _prefix_det(M.rows, tuple(range(M.nrows)), M.nvars, {})


def minor_list(M: PolyMatrix, n: int) -> List[Polynomial]:
    """All ``n x n`` minors, columns-major over index combinations."""
    if n < 0 or n > min(M.shape):
        raise ValueError(f"minor size {n} out of range for a {M.nrows}x{M.ncols} matrix")
    if n == 0:
        return [Polynomial.one(M.nvars)]
    out = []
    for cols in combinations(range(M.ncols), n):
        A = [[row[j] for j in cols] for row in M.rows]
        memo: Dict = {}
        for rows in combinations(range(M.nrows), n):
            out.append(_prefix_det(A, rows, M.nvars, memo))
    return out


def minors(M: PolyMatrix, n: int) -> Ideal:
    """Ideal ``I_n(M)`` of ``n x n`` minors; ``I_0`` is the unit ideal."""
    if n == 0:
        return unit_ideal(M.nvars)
    return Ideal(minor_list(M, n), M.nvars)


def maximal_minors(M: PolyMatrix) -> List[Polynomial]:
    """For ``N x (N-1)`` matrices: ``det`` of ``M`` with row ``l`` deleted, ``l = 1..N``."""
    N, k = M.shape
    if N != k + 1:
        raise ValueError("maximal_minors expects an N x (N-1) matrix")
    memo: Dict = {}
    full = tuple(range(N))
    return [_prefix_det(M.rows, full[:l] + full[l + 1:], M.nvars, memo) for l in range(N)]


def signed_maximal_minors(M: PolyMatrix) -> List[Polynomial]:
    """``(-1)^(l+1)`` times the ``l``-th maximal minor (1-based ``l``)."""
    return [m if l % 2 == 0 else -m for l, m in enumerate(maximal_minors(M))]
