"""
Permutations, transpositions and Hessenberg functions.

Everything here speaks 1-indexed one-line notation: ``Permutation((2, 3, 1))``
is the permutation with w(1) = 2, w(2) = 3, w(3) = 1, and ``w(i)`` /
``w.inv(i)`` evaluate w and its inverse.

>>> w = Permutation((2, 3, 1))
>>> inverse(w)
Permutation(3,1,2)
>>> list(enumerate_hessenberg_functions(2))
[HessenbergFunction(1,2), HessenbergFunction(2,2)]
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .errors import (BadIndices, BoundExceeded, HessmgError,
                     InvalidPermutation, NotMonotone, OutOfRange)

__all__ = [
    "Permutation", "HessenbergFunction", "Transposition",
    "validate_hessenberg", "inverse", "apply_transposition",
    "enumerate_permutations", "enumerate_hessenberg_functions",
    "enumeration_bound", "check_bound", "catalan",
]

DEFAULT_MAX_N = 8


def enumeration_bound() -> int:
    """The largest n accepted by exhaustive enumerations (env HESSMG_MAX_N)."""
    raw = os.environ.get("HESSMG_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        value = int(raw)
    except ValueError:
        raise HessmgError(f"HESSMG_MAX_N must be an integer, got {raw!r}") from None
    return max(value, 1)


def check_bound(n: int, bound: int | None = None) -> None:
    limit = enumeration_bound() if bound is None else bound
    if n < 1:
        raise BadIndices(f"n must be positive, got {n}")
    if n > limit:
        raise BoundExceeded(n, limit)


def _parse_ints(text: str) -> tuple[int, ...]:
    text = text.strip().strip("()[]")
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise InvalidPermutation(f"cannot parse integer list {text!r}") from None


@dataclass(frozen=True)
class Permutation:
    values: tuple[int, ...]
    _inverse: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        values = tuple(self.values)
        n = len(values)
        if n == 0:
            raise InvalidPermutation("empty permutation")
        if sorted(values) != list(range(1, n + 1)):
            raise InvalidPermutation(f"{values} is not a permutation of 1..{n}")
        inv = [0] * n
        for i, v in enumerate(values, start=1):
            inv[v - 1] = i
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "_inverse", tuple(inv))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        return cls(_parse_ints(text))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        return self.values[i - 1]

    def inv(self, i: int) -> int:
        """w^{-1}(i)."""
        return self._inverse[i - 1]

    def inverse(self) -> "Permutation":
        return Permutation(self._inverse)

    def is_identity(self) -> bool:
        return self.values == tuple(range(1, self.n + 1))

    def __lt__(self, other: "Permutation") -> bool:
        return self.values < other.values

    def __str__(self) -> str:
        return ",".join(map(str, self.values))

    def __repr__(self) -> str:
        return f"Permutation({self})"


@dataclass(frozen=True)
class HessenbergFunction:
    """A nondecreasing h on {1..n} with j <= h(j) <= n.

    Calling ``h(0)`` returns 0; indices outside 0..n raise IndexError.
    """
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        _check_hessenberg(self.values)

    @classmethod
    def parse(cls, text: str) -> "HessenbergFunction":
        return validate_hessenberg(_parse_ints(text))

    @classmethod
    def full(cls, n: int) -> "HessenbergFunction":
        return cls((n,) * n)

    @classmethod
    def minimal(cls, n: int) -> "HessenbergFunction":
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, j: int) -> int:
        if j == 0:
            return 0
        if not 1 <= j <= self.n:
            raise IndexError(f"h({j}) undefined for n = {self.n}")
        return self.values[j - 1]

    def __lt__(self, other: "HessenbergFunction") -> bool:
        return self.values < other.values

    def __str__(self) -> str:
        return ",".join(map(str, self.values))

    def __repr__(self) -> str:
        return f"HessenbergFunction({self})"


@dataclass(frozen=True, order=True)
class Transposition:
    """s_{j,k}, swapping the values j < k."""
    j: int
    k: int

    def __post_init__(self):
        if not (1 <= self.j < self.k):
            raise BadIndices(f"transposition needs 1 <= j < k, got ({self.j}, {self.k})")

    @classmethod
    def parse(cls, text: str) -> "Transposition":
        text = text.strip()
        if text.startswith("s"):
            text = text[1:]
        values = _parse_ints(text)
        if len(values) != 2:
            raise BadIndices(f"cannot parse transposition {text!r}")
        return cls(*values)

    def __str__(self) -> str:
        return f"s({self.j},{self.k})"


def _check_hessenberg(values: Sequence[int]) -> None:
    n = len(values)
    if n == 0:
        raise BadIndices("Hessenberg function needs at least one value")
    for j, value in enumerate(values, start=1):
        if not isinstance(value, int) or isinstance(value, bool):
            raise OutOfRange(j, value, n)
        if not j <= value <= n:
            raise OutOfRange(j, value, n)
        if j < n and value > values[j]:
            raise NotMonotone(j, value, values[j])


def validate_hessenberg(values: Sequence[int]) -> HessenbergFunction:
    """Validate ``values`` as h(1), ..., h(n); never repairs its input.

    Positions are scanned left to right, so the reported j is the first
    offending index.
    """
    values = tuple(values)
    _check_hessenberg(values)
    return HessenbergFunction(values)


def inverse(w: Permutation) -> Permutation:
    return w.inverse()


def apply_transposition(s: Transposition, w: Permutation) -> Permutation:
    """Left multiplication s_{j,k} * w: swaps the values j and k."""
    if s.k > w.n:
        raise BadIndices(f"{s} does not act on S_{w.n}")
    swap = {s.j: s.k, s.k: s.j}
    return Permutation(tuple(swap.get(v, v) for v in w.values))


def enumerate_permutations(n: int, bound: int | None = None) -> Iterator[Permutation]:
    check_bound(n, bound)
    for values in itertools.permutations(range(1, n + 1)):
        yield Permutation(values)


def enumerate_hessenberg_functions(n: int, bound: int | None = None) -> Iterator[HessenbergFunction]:
    """All Hessenberg functions on {1..n} in lexicographic order."""
    check_bound(n, bound)

    def extend(prefix):
        j = len(prefix) + 1
        if j > n:
            yield HessenbergFunction(tuple(prefix))
            return
        lowest = max(j, prefix[-1]) if prefix else 1
        for value in range(lowest, n + 1):
            prefix.append(value)
            yield from extend(prefix)
            prefix.pop()

    yield from extend([])


def catalan(n: int) -> int:
    """Catalan number by the convolution recurrence C_{m+1} = sum C_i C_{m-i}."""
    c = [1]
    for m in range(n):
        c.append(sum(c[i] * c[m - i] for i in range(m + 1)))
    return c[n]
