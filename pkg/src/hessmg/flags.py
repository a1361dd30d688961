"""
Flag representatives, linear operators and Hessenberg membership oracles.

A flag is represented by an invertible matrix g whose first j columns span
V_j(g). Four independent procedures decide whether X V_j(g) is contained in
V_{h(j)}(g) for all j:

``membership_rank``
    X v_j lies in span(v_1, ..., v_{h(j)}) (rank test).
``membership_minors_full``
    every full determinant of g with column k > h(j) replaced by X v_j vanishes.
``membership_minors_all``
    every (h(j)+1)-minor of [v_1..v_{h(j)}, X v_1..X v_j] vanishes.
``membership_adjoint``
    g^{-1} X g has zeros below the h-staircase.

They must always agree; the verification harness treats any disagreement as
a failure with a reproducer. The condition at j = n is vacuous (h(n) = n) and
is skipped everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .combinatorics import HessenbergFunction, Permutation
from .errors import BadIndices, HessmgError, NotAFlag, ShapeMismatch, ZeroParameter
from .linalg import (RMatrix, all_minors_vanish, as_fraction, determinant,
                     in_span, inverse_matrix, load_matrix)

DIAGONAL = "diagonal"
NILPOTENT = "nilpotent"
GENERAL = "general"


@dataclass(frozen=True)
class LinearOperator:
    kind: str
    eigenvalues: tuple = ()
    matrix: RMatrix | None = None

    @classmethod
    def diagonal(cls, eigenvalues: Sequence) -> "LinearOperator":
        values = tuple(as_fraction(x) for x in eigenvalues)
        if not values:
            raise BadIndices("a diagonal operator needs at least one eigenvalue")
        return cls(DIAGONAL, eigenvalues=values)

    @classmethod
    def regular_nilpotent(cls) -> "LinearOperator":
        return cls(NILPOTENT)

    @classmethod
    def general(cls, matrix: RMatrix) -> "LinearOperator":
        if not matrix.is_square:
            raise ShapeMismatch("operator matrix must be square")
        return cls(GENERAL, matrix=matrix)

    @property
    def distinct(self) -> bool:
        """Whether a diagonal operator has pairwise distinct eigenvalues."""
        return len(set(self.eigenvalues)) == len(self.eigenvalues)

    @property
    def size(self) -> int | None:
        if self.kind == DIAGONAL:
            return len(self.eigenvalues)
        if self.kind == GENERAL:
            return self.matrix.rows
        return None

    def materialize(self, n: int) -> RMatrix:
        if self.size is not None and self.size != n:
            raise ShapeMismatch(f"operator of size {self.size} used in dimension {n}")
        if self.kind == DIAGONAL:
            return RMatrix.from_rows([[self.eigenvalues[i] if i == j else 0
                                       for j in range(n)] for i in range(n)])
        if self.kind == NILPOTENT:
            # N e_1 = 0, N e_{i+1} = e_i
            return RMatrix.from_rows([[int(j == i + 1) for j in range(n)]
                                      for i in range(n)])
        return self.matrix

    def __str__(self) -> str:
        if self.kind == DIAGONAL:
            return "diag:" + ",".join(str(x) for x in self.eigenvalues)
        if self.kind == NILPOTENT:
            return "nilpotent"
        return "matrix"


def parse_operator(text: str, n: int | None = None) -> LinearOperator:
    """Parse "nilpotent", "diag:1,2,3" or "matrix:<file.json>"."""
    text = text.strip()
    if text == "nilpotent":
        return LinearOperator.regular_nilpotent()
    if text == "diag" and n is not None:
        return LinearOperator.diagonal(range(1, n + 1))
    if text.startswith("diag:"):
        try:
            values = [Fraction(x) for x in text[5:].split(",") if x.strip()]
        except (ValueError, ZeroDivisionError):
            raise HessmgError(f"bad eigenvalue list in {text!r}") from None
        return LinearOperator.diagonal(values)
    if text.startswith("matrix:"):
        return LinearOperator.general(load_matrix(text[7:]))
    raise HessmgError(f"unknown operator {text!r}")


@dataclass(frozen=True)
class FlagMatrix:
    matrix: RMatrix

    def __post_init__(self):
        if not self.matrix.is_square:
            raise ShapeMismatch("a flag matrix must be square")
        if determinant(self.matrix) == 0:
            raise NotAFlag("matrix is singular, its columns do not form a flag")

    @property
    def n(self) -> int:
        return self.matrix.rows

    def columns(self):
        return self.matrix.columns()


def _as_flag(g) -> FlagMatrix:
    return g if isinstance(g, FlagMatrix) else FlagMatrix(g)


def permutation_flag(w: Permutation) -> FlagMatrix:
    """[w]: the matrix with a 1 at (w(i), i)."""
    n = w.n
    return FlagMatrix(RMatrix.from_rows(
        [[int(w(col) == row) for col in range(1, n + 1)] for row in range(1, n + 1)]))


def one_parameter_flag(j: int, k: int, c, w: Permutation) -> FlagMatrix:
    """G_{jk}(c) w: the permutation matrix of w plus c at (j, w^{-1}(k))."""
    c = as_fraction(c)
    if not 1 <= j < k <= w.n:
        raise BadIndices(f"need 1 <= j < k <= {w.n}, got j={j}, k={k}")
    if c == 0:
        raise ZeroParameter("orbit parameter c must be nonzero")
    n = w.n
    col = w.inv(k)
    rows = [[Fraction(int(w(l) == i)) for l in range(1, n + 1)] for i in range(1, n + 1)]
    rows[j - 1][col - 1] = c
    return FlagMatrix(RMatrix.from_rows(rows))


def hessenberg_space_contains(M: RMatrix, h: HessenbergFunction) -> bool:
    """True iff M[i, j] == 0 whenever i > h(j) (1-indexed)."""
    if not M.is_square or M.rows != h.n:
        raise ShapeMismatch(f"{M.rows}x{M.cols} matrix against h on {h.n} points")
    n = h.n
    return all(M[i - 1, j - 1] == 0
               for j in range(1, n + 1) for i in range(h(j) + 1, n + 1))


def _setup(g, X: LinearOperator, h: HessenbergFunction):
    g = _as_flag(g)
    if g.n != h.n:
        raise ShapeMismatch(f"flag in dimension {g.n} against h on {h.n} points")
    Xm = X.materialize(g.n)
    cols = g.columns()
    return g, Xm, cols, [Xm.apply(v) for v in cols]


def membership_rank(g, X: LinearOperator, h: HessenbergFunction) -> bool:
    _, _, v, Xv = _setup(g, X, h)
    n = h.n
    return all(in_span(v[:h(j)], Xv[j - 1]) for j in range(1, n))


def membership_minors_full(g, X: LinearOperator, h: HessenbergFunction) -> bool:
    g, _, v, Xv = _setup(g, X, h)
    n = h.n
    for j in range(1, n):
        for k in range(h(j) + 1, n + 1):
            replaced = v[:k - 1] + [Xv[j - 1]] + v[k:]
            if determinant(RMatrix.from_columns(replaced)) != 0:
                return False
    return True


def membership_minors_all(g, X: LinearOperator, h: HessenbergFunction) -> bool:
    _, _, v, Xv = _setup(g, X, h)
    n = h.n
    return all(all_minors_vanish(v[:h(j)] + Xv[:j], h(j) + 1) for j in range(1, n))


def membership_adjoint(g, X: LinearOperator, h: HessenbergFunction) -> bool:
    g, Xm, _, _ = _setup(g, X, h)
    conj = inverse_matrix(g.matrix) @ Xm @ g.matrix
    return hessenberg_space_contains(conj, h)


ORACLES = {
    "rank": membership_rank,
    "minors_full": membership_minors_full,
    "minors_all": membership_minors_all,
    "adjoint": membership_adjoint,
}


def all_verdicts(g, X: LinearOperator, h: HessenbergFunction) -> dict[str, bool]:
    g = _as_flag(g)
    return {name: oracle(g, X, h) for name, oracle in ORACLES.items()}
