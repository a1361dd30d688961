"""
Exact linear algebra over the rationals.

Entries are :class:`fractions.Fraction`; nothing here ever touches a float,
because the membership oracles decide "determinant == 0" and that has to be
exact. Determinants and ranks go through fraction-free (Bareiss) elimination
after scaling each row to integers.

Row and column indices in :func:`minor` are 1-indexed to match the
determinantal notation d_{R,C}; everything else uses ordinary Python indices.
"""

from __future__ import annotations

import itertools
import json
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (HessmgError, IndexOutOfRange, NotABasis, NotSquare,
                     ShapeMismatch, ZeroVector)

Vector = tuple  # tuple of Fraction, a column


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point entries are not allowed")
    return Fraction(x)


def vector(values: Iterable) -> Vector:
    return tuple(as_fraction(v) for v in values)


def unit_vector(n: int, i: int) -> Vector:
    """e_i in Q^n, 1-indexed."""
    return tuple(Fraction(int(r == i)) for r in range(1, n + 1))


@dataclass(frozen=True)
class RMatrix:
    rows: int
    cols: int
    entries: tuple  # tuple of row tuples

    def __post_init__(self):
        entries = tuple(tuple(as_fraction(x) for x in row) for row in self.entries)
        if len(entries) != self.rows or any(len(r) != self.cols for r in entries):
            raise ShapeMismatch(
                f"entries do not form a {self.rows}x{self.cols} grid")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        return cls(len(rows), ncols, tuple(tuple(r) for r in rows))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> "RMatrix":
        columns = [tuple(c) for c in columns]
        if not columns:
            return cls(0, 0, ())
        height = len(columns[0])
        if any(len(c) != height for c in columns):
            raise ShapeMismatch("columns have different lengths")
        return cls(height, len(columns),
                   tuple(tuple(c[i] for c in columns) for i in range(height)))

    @classmethod
    def identity(cls, n: int) -> "RMatrix":
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "RMatrix":
        cols = rows if cols is None else cols
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "RMatrix":
        return RMatrix.from_columns(self.entries)

    def __matmul__(self, other):
        if isinstance(other, RMatrix):
            if self.cols != other.rows:
                raise ShapeMismatch(f"cannot multiply {self.rows}x{self.cols} "
                                    f"by {other.rows}x{other.cols}")
            cols = other.columns()
            return RMatrix.from_columns([self.apply(c) for c in cols]) \
                if cols else RMatrix.zeros(self.rows, 0)
        return self.apply(other)

    def apply(self, v: Sequence) -> Vector:
        """Matrix-vector product."""
        if len(v) != self.cols:
            raise ShapeMismatch(f"vector of length {len(v)} for {self.cols} columns")
        return tuple(sum((a * b for a, b in zip(row, v)), Fraction(0))
                     for row in self.entries)

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols,
                "entries": [[str(x) for x in row] for row in self.entries]}

    @classmethod
    def from_json(cls, doc: dict) -> "RMatrix":
        try:
            rows, cols, entries = doc["rows"], doc["cols"], doc["entries"]
        except (KeyError, TypeError):
            raise ShapeMismatch("matrix document needs rows, cols and entries") from None
        try:
            parsed = [[Fraction(x) if isinstance(x, str) else as_fraction(x)
                       for x in row] for row in entries]
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            raise HessmgError(f"bad matrix entry: {exc}") from None
        return cls(rows, cols, tuple(tuple(r) for r in parsed))

    def __str__(self) -> str:
        return "\n".join("[" + " ".join(str(x) for x in row) + "]"
                         for row in self.entries)


def load_matrix(path) -> RMatrix:
    with open(path) as fh:
        return RMatrix.from_json(json.load(fh))


def dump_matrix(M: RMatrix, path) -> None:
    with open(path, "w") as fh:
        json.dump(M.to_json(), fh, indent=2)
        fh.write("\n")


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[int]], int]:
    """Scale every row to integers; returns the rows and the product of scales."""
    scale = 1
    out = []
    for row in rows:
        m = math.lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * m) for x in row])
        scale *= m
    return out, scale


def _bareiss(a: list[list[int]]) -> tuple[int, int]:
    """In-place fraction-free elimination on an integer grid.

    Returns (rank, sign * last pivot). For a square full-rank matrix the
    second value is the determinant.
    """
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    prev = 1
    sign = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        if pivot != r:
            a[r], a[pivot] = a[pivot], a[r]
            sign = -sign
        p = a[r][c]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                # exact by Sylvester's identity
                a[i][j] = (a[i][j] * p - a[i][c] * a[r][j]) // prev
            a[i][c] = 0
        prev = p
        r += 1
    return r, sign * prev


def determinant(M: RMatrix) -> Fraction:
    if not M.is_square:
        raise NotSquare(f"{M.rows}x{M.cols} matrix has no determinant")
    n = M.rows
    if n == 0:
        return Fraction(1)
    rows, scale = _integer_rows(M.entries)
    rank_, last = _bareiss(rows)
    if rank_ < n:
        return Fraction(0)
    return Fraction(last, scale)


def cofactor_determinant(M: RMatrix) -> Fraction:
    """Laplace expansion along the first row; independent check on :func:`determinant`."""
    if not M.is_square:
        raise NotSquare(f"{M.rows}x{M.cols} matrix has no determinant")

    def expand(rows):
        if not rows:
            return Fraction(1)
        if len(rows) == 1:
            return rows[0][0]
        total = Fraction(0)
        for j, a in enumerate(rows[0]):
            if a == 0:
                continue
            sub = [row[:j] + row[j + 1:] for row in rows[1:]]
            total += (-1) ** j * a * expand(sub)
        return total

    return expand([list(r) for r in M.entries])


def rank(M: RMatrix) -> int:
    if M.rows == 0 or M.cols == 0:
        return 0
    rows, _ = _integer_rows(M.entries)
    r, _ = _bareiss(rows)
    return r


def minor(M: RMatrix | None, rowset: Sequence[int], colvecs: Sequence[Sequence]) -> Fraction:
    """d_{R,C}: determinant of the matrix whose (i, j) entry is entry R_i of C_j.

    ``rowset`` is 1-indexed and strictly increasing. ``colvecs`` are explicit
    column vectors (they need not be columns of ``M``); ``M`` only fixes the
    ambient dimension and may be None.
    """
    rowset = tuple(rowset)
    if len(rowset) != len(colvecs):
        raise ShapeMismatch(f"|R| = {len(rowset)} but |C| = {len(colvecs)}")
    if any(b <= a for a, b in zip(rowset, rowset[1:])):
        raise IndexOutOfRange(f"row set {rowset} is not strictly increasing")
    height = M.rows if M is not None else (len(colvecs[0]) if colvecs else 0)
    for c in colvecs:
        if len(c) != height:
            raise ShapeMismatch(f"column of length {len(c)} in dimension {height}")
    if rowset and not (1 <= rowset[0] and rowset[-1] <= height):
        raise IndexOutOfRange(f"row set {rowset} outside 1..{height}")
    sub = RMatrix.from_rows([[as_fraction(c[r - 1]) for c in colvecs] for r in rowset]) \
        if rowset else RMatrix(0, 0, ())
    return determinant(sub)


def in_span(vectors: Sequence[Sequence], v: Sequence) -> bool:
    """True iff v lies in the rational span of ``vectors`` (rank test)."""
    v = vector(v)
    vectors = [vector(u) for u in vectors]
    for u in vectors:
        if len(u) != len(v):
            raise ShapeMismatch(f"vector of length {len(u)} against {len(v)}")
    if not vectors:
        return all(x == 0 for x in v)
    base = rank(RMatrix.from_columns(vectors))
    return rank(RMatrix.from_columns(vectors + [v])) == base


def lemma_dependence(basis: Sequence[Sequence], v: Sequence, j: int) -> bool:
    """True iff swapping v in for each of v_{j+1}, ..., v_n gives a dependent set.

    For a basis v_1..v_n this is equivalent to v lying in span(v_1..v_j).
    """
    basis = [vector(b) for b in basis]
    n = len(basis)
    v = vector(v)
    if any(len(b) != n for b in basis) or len(v) != n:
        raise ShapeMismatch("basis must be n columns of length n")
    if rank(RMatrix.from_columns(basis)) != n:
        raise NotABasis("columns are linearly dependent")
    if all(x == 0 for x in v):
        raise ZeroVector("v must be nonzero")
    if not 1 <= j <= n:
        raise IndexOutOfRange(f"j = {j} outside 1..{n}")
    for k in range(j + 1, n + 1):
        swapped = basis[:k - 1] + [v] + basis[k:]
        if rank(RMatrix.from_columns(swapped)) == n:
            return False
    return True


def inverse_matrix(M: RMatrix) -> RMatrix:
    """Gauss-Jordan inverse; raises ZeroDivisionError for singular input."""
    if not M.is_square:
        raise NotSquare(f"{M.rows}x{M.cols} matrix has no inverse")
    n = M.rows
    a = [list(row) + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(M.entries)]
    for c in range(n):
        pivot = next((i for i in range(c, n) if a[i][c] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("matrix is singular")
        a[c], a[pivot] = a[pivot], a[c]
        p = a[c][c]
        a[c] = [x / p for x in a[c]]
        for i in range(n):
            if i != c and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return RMatrix.from_rows([row[n:] for row in a])


def random_rational(rng: random.Random, max_num: int = 20, max_den: int = 5,
                    nonzero: bool = False) -> Fraction:
    while True:
        x = Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))
        if x != 0 or not nonzero:
            return x


def random_matrix(rng: random.Random, rows: int, cols: int | None = None) -> RMatrix:
    """Entries p/q with |p| <= 20, 1 <= q <= 5."""
    cols = rows if cols is None else cols
    return RMatrix.from_rows([[random_rational(rng) for _ in range(cols)]
                              for _ in range(rows)])


def random_invertible(rng: random.Random, n: int) -> RMatrix:
    while True:
        M = random_matrix(rng, n)
        if determinant(M) != 0:
            return M


def all_minors_vanish(columns: Sequence[Vector], size: int) -> bool:
    """True iff every size x size minor of the matrix with these columns is 0."""
    if not columns:
        return True
    height = len(columns[0])
    if size > min(height, len(columns)):
        return True
    for rows in itertools.combinations(range(1, height + 1), size):
        for cols in itertools.combinations(columns, size):
            if minor(None, rows, cols) != 0:
                return False
    return True
