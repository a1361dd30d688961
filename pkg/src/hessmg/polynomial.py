"""Sparse multivariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .errors import ShapeMismatch, UnboundVariable
from .linalg import as_fraction


def ring_names(n: int, with_t: bool = True) -> tuple[str, ...]:
    """Variable names x1..xn (and t) for the ring Q[x_1..x_n, t]."""
    names = tuple(f"x{i}" for i in range(1, n + 1))
    return names + ("t",) if with_t else names


class Polynomial:
    """A map from exponent vectors to nonzero Fractions over fixed variable names.

    >>> x1, x2 = Polynomial.variables(("x1", "x2"))
    >>> str((x1 - x2 - 1) * (x1 - 1))
    'x1^2-x1*x2-2*x1+x2+1'
    """

    __slots__ = ("names", "terms")

    def __init__(self, names: Sequence[str], terms: Mapping | None = None):
        self.names = tuple(names)
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != len(self.names):
                raise ShapeMismatch(f"exponent vector {exps} for variables {self.names}")
            c = as_fraction(c)
            if c != 0:
                clean[exps] = clean.get(exps, Fraction(0)) + c
                if clean[exps] == 0:
                    del clean[exps]
        self.terms = clean

    @classmethod
    def const(cls, c, names: Sequence[str]) -> "Polynomial":
        return cls(names, {(0,) * len(names): c})

    @classmethod
    def var(cls, name: str, names: Sequence[str]) -> "Polynomial":
        names = tuple(names)
        if name not in names:
            raise UnboundVariable(f"{name} is not one of {names}")
        return cls(names, {tuple(int(v == name) for v in names): 1})

    @classmethod
    def variables(cls, names: Sequence[str]) -> list["Polynomial"]:
        return [cls.var(v, names) for v in names]

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.names != self.names:
                raise ShapeMismatch(f"rings differ: {self.names} vs {other.names}")
            return other
        return Polynomial.const(other, self.names)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return Polynomial(self.names, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.names, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return Polynomial(self.names, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = Polynomial.const(1, self.names)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.names == other.names and self.terms == other.terms
        try:
            return self == Polynomial.const(other, self.names)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.names, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def used_variables(self) -> set[str]:
        return {v for e in self.terms for v, a in zip(self.names, e) if a}

    def evaluate(self, assignment: Mapping[str, object]) -> Fraction:
        missing = self.used_variables() - set(assignment)
        if missing:
            raise UnboundVariable(f"no value for {sorted(missing)}")
        values = [as_fraction(assignment[v]) if v in assignment else Fraction(0)
                  for v in self.names]
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for x, a in zip(values, e):
                if a:
                    term *= x ** a
            total += term
        return total

    def substitute(self, images: Mapping[str, "Polynomial"], names: Sequence[str]) -> "Polynomial":
        """Replace each variable by a polynomial over ``names``.

        Variables absent from ``images`` must be among ``names`` and map to themselves.
        """
        names = tuple(names)
        image = []
        for v in self.names:
            if v in images:
                image.append(images[v])
            elif v in names:
                image.append(Polynomial.var(v, names))
            else:
                image.append(None)
        result = Polynomial(names)
        for e, c in self.terms.items():
            term = Polynomial.const(c, names)
            for v, p, a in zip(self.names, image, e):
                if a:
                    if p is None:
                        raise UnboundVariable(f"no image for {v}")
                    term = term * p ** a
            result = result + term
        return result

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        # graded lex, highest first
        order = sorted(self.terms, key=lambda e: (sum(e), e), reverse=True)
        out = ""
        for e in order:
            c = self.terms[e]
            mono = "*".join(v if a == 1 else f"{v}^{a}"
                            for v, a in zip(self.names, e) if a)
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            if c < 0:
                out += "-" + body
            else:
                out += ("+" if out else "") + body
        return out

    def __repr__(self) -> str:
        return f"Polynomial({self})"


def product(factors: Sequence[Polynomial], names: Sequence[str]) -> Polynomial:
    result = Polynomial.const(1, names)
    for f in factors:
        result = result * f
    return result
