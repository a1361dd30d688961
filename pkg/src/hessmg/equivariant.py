"""
Ideals detecting the S-fixed points of Hess(N, h), and localization products.

Three generator families live here:

* ``gtilde_generators(h)``: polynomials in x_1..x_n whose common zeros among
  the points (w(1), ..., w(n)) are meant to pick out the fixed points of
  Hess(N, h).
* ``g_generators(n)``: the t-homogenized family in x_1..x_n, t, transcribed
  literally (it does not depend on h).
* ``symmetric_ideal_generators(n)``: e_i(x) - e_i(t, 2t, ..., nt), whose zero
  set is the union of the lines x = w t.

Each generator keeps its factor list next to the expanded polynomial.
:func:`relation_report` and :func:`line_vanishing_check` compare the families
on the lines x = w t and only report what they find.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from .combinatorics import (HessenbergFunction, Permutation, check_bound,
                            enumerate_permutations)
from .errors import HessmgError, NotAFixedPoint
from .polynomial import Polynomial, product, ring_names
from .torus import nilpotent_fixed_point

INSKO = "insko-4.14"
COROLLARY = "cor-4.6"
MODES = (INSKO, COROLLARY)
AS_WRITTEN = "as-written"
I_SHIFT = "i-shift"
COEFFS = (AS_WRITTEN, I_SHIFT)


@dataclass(frozen=True)
class Generator:
    index: int
    factors: tuple
    names: tuple
    expanded: Polynomial = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "expanded", product(self.factors, self.names))

    def consistent(self) -> bool:
        return product(self.factors, self.names) == self.expanded

    def factored_text(self) -> str:
        if not self.factors:
            return "1"
        return "*".join(f"({f})" for f in self.factors)

    def evaluate(self, assignment) -> object:
        return self.expanded.evaluate(assignment)

    def to_json(self) -> dict:
        return {"index": self.index, "factored": self.factored_text(),
                "expanded": str(self.expanded)}


def j_ell(h: HessenbergFunction, ell: int) -> int | None:
    """Largest j < ell with h(j-1) < ell <= h(j), using h(0) = 0; None if none exists."""
    for j in range(ell - 1, 0, -1):
        if h(j - 1) < ell <= h(j):
            return j
    return None


def gtilde_generators(h: HessenbergFunction) -> list[Generator]:
    n = h.n
    names = ring_names(n, with_t=False)
    x = Polynomial.variables(names)
    gens = []
    for i in range(1, n + 1):
        factors = [x[i - 1] - i]
        for k in range(i + 1, h(i) + 1):
            factors.append(x[i - 1] - x[k - 1] - 1)
        for ell in range(i, h(i - 1) + 1):
            start = j_ell(h, ell)
            if start is None:
                continue
            for j in range(start, i):
                factors.append(x[j - 1] - x[ell - 1] - 1)
        gens.append(Generator(i, tuple(factors), names))
    return gens


def _point(w: Permutation) -> dict:
    return {f"x{i}": w(i) for i in range(1, w.n + 1)}


def fixed_points_via_ideal(h: HessenbergFunction) -> list[Permutation]:
    """All w in S_n at which every gtilde generator evaluates to 0."""
    check_bound(h.n)
    gens = gtilde_generators(h)
    return [w for w in enumerate_permutations(h.n)
            if all(g.evaluate(_point(w)) == 0 for g in gens)]


def g_generators(n: int) -> list[Generator]:
    """g_i = (x_i - i t) prod_{k<j<=i, k<i} (x_k - x_j - t) prod_{j>i} (x_i - x_j - t)."""
    names = ring_names(n)
    *x, t = Polynomial.variables(names)
    gens = []
    for i in range(1, n + 1):
        factors = [x[i - 1] - i * t]
        for k in range(1, i):
            for j in range(k + 1, i + 1):
                factors.append(x[k - 1] - x[j - 1] - t)
        for j in range(i + 1, n + 1):
            factors.append(x[i - 1] - x[j - 1] - t)
        gens.append(Generator(i, tuple(factors), names))
    return gens


def elementary_symmetric(values, i: int):
    return sum((math.prod(c) for c in itertools.combinations(values, i)), 0)


def symmetric_ideal_generators(n: int) -> list[Generator]:
    """e_i(x_1..x_n) - e_i(1, ..., n) t^i for i = 1..n (single-factor generators)."""
    names = ring_names(n)
    *x, t = Polynomial.variables(names)
    gens = []
    for i in range(1, n + 1):
        e_x = Polynomial(names)
        for combo in itertools.combinations(x, i):
            e_x = e_x + product(combo, names)
        gens.append(Generator(i, (e_x - elementary_symmetric(range(1, n + 1), i) * t ** i,),
                              names))
    return gens


def evaluate(p: Polynomial, assignment) -> object:
    return p.evaluate(assignment)


def on_line(p: Polynomial, w: Permutation) -> Polynomial:
    """p restricted to x_i = w(i) t, as a polynomial in t."""
    tnames = ("t",)
    t = Polynomial.var("t", tnames)
    images = {f"x{i}": w(i) * t for i in range(1, w.n + 1)}
    return p.substitute(images, tnames)


@dataclass
class Localization:
    w: Permutation
    h: HessenbergFunction
    mode: str
    coeff: str
    fixed: bool
    factors: list = field(default_factory=list)  # (i, j, Polynomial in t)

    @property
    def is_zero_class(self) -> bool:
        return not self.fixed

    @property
    def pairs(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j, _ in self.factors]

    @property
    def product(self) -> Polynomial:
        names = ("t",)
        if not self.fixed:
            return Polynomial(names)
        return product([f for _, _, f in self.factors], names)

    def to_json(self) -> dict:
        return {"w": str(self.w), "h": str(self.h), "mode": self.mode,
                "coeff": self.coeff, "fixed": self.fixed,
                "factors": [{"i": i, "j": j, "factor": str(f)} for i, j, f in self.factors],
                "product": str(self.product)}


def localization_factors(w: Permutation, h: HessenbergFunction, mode: str = INSKO,
                         coeff: str = AS_WRITTEN) -> Localization:
    """Index pairs and degree-one factors of the localization at [w].

    ``mode`` selects the index predicate: h(j) < w^{-1}(i) ("insko-4.14"), or
    additionally w^{-1}(i) <= h(w^{-1}(i+1)) ("cor-4.6"). ``coeff`` selects the
    factor: (2 - w(j)) t ("as-written") or (i - w(j) + 1) t ("i-shift").
    A non-fixed w gives the zero class in "insko-4.14" mode and raises
    NotAFixedPoint in "cor-4.6" mode.
    """
    if mode not in MODES:
        raise HessmgError(f"mode must be one of {MODES}")
    if coeff not in COEFFS:
        raise HessmgError(f"coeff must be one of {COEFFS}")
    if w.n != h.n:
        raise HessmgError(f"w in S_{w.n} against h on {h.n} points")
    fixed = nilpotent_fixed_point(w, h)
    loc = Localization(w, h, mode, coeff, fixed)
    if not fixed:
        if mode == COROLLARY:
            raise NotAFixedPoint(f"[{w}] is not a fixed point of Hess(N, {h})")
        return loc
    n = w.n
    t = Polynomial.var("t", ("t",))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if not h(j) < w.inv(i):
                continue
            if mode == COROLLARY and not (i < n and w.inv(i) <= h(w.inv(i + 1))):
                continue
            c = (2 - w(j)) if coeff == AS_WRITTEN else (i - w(j) + 1)
            loc.factors.append((i, j, c * t))
    return loc


def relation_report(h: HessenbergFunction) -> list[dict]:
    """Compare g_i(w t) with t * gtilde_i(w) for every w and i."""
    n = h.n
    check_bound(n)
    g = g_generators(n)
    gt = gtilde_generators(h)
    t = Polynomial.var("t", ("t",))
    rows = []
    for w in enumerate_permutations(n):
        for gi, gti in zip(g, gt):
            lhs = on_line(gi.expanded, w)
            rhs = gti.evaluate(_point(w)) * t
            rows.append({"w": str(w), "generator_index": gi.index,
                         "lhs": str(lhs), "rhs": str(rhs), "match": lhs == rhs})
    return rows


def line_vanishing_check(h: HessenbergFunction) -> dict:
    """Which lines x = w t lie in the zero set of E_n + <g_1..g_n>."""
    n = h.n
    check_bound(n)
    en = symmetric_ideal_generators(n)
    g = g_generators(n)
    rows = []
    vanishing = []
    for w in enumerate_permutations(n):
        all_zero = True
        for family, gens in (("en", en), ("g", g)):
            for gen in gens:
                zero = on_line(gen.expanded, w).is_zero()
                all_zero &= zero
                rows.append({"w": str(w), "family": family,
                             "generator_index": gen.index, "vanishes": zero})
        if all_zero:
            vanishing.append(str(w))
    ideal_points = [str(w) for w in fixed_points_via_ideal(h)]
    return {"n": n, "h": str(h), "rows": rows, "vanishing_set": vanishing,
            "ideal_fixed_points": ideal_points,
            "sets_equal": vanishing == ideal_points}
