"""
Torus-fixed points, one-dimensional orbits and moment graphs.

The full flag variety has fixed points [w], w in S_n, and an edge [w] -- [s_{j,k} w]
(j < k) labelled t_j - t_k whenever w^{-1}(j) > w^{-1}(k); the edge is the closure
of the curve of flags G_{jk}(c) w, c != 0. The functions below decide which of
these vertices and edges survive in Hess(X, h) for X semisimple or regular
nilpotent, purely combinatorially. flags.py holds the linear-algebra oracles
the criteria are checked against.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from .combinatorics import (HessenbergFunction, Permutation, Transposition,
                            apply_transposition, check_bound,
                            enumerate_permutations)
from .errors import HessmgError, NotAnEdge

SEMISIMPLE = "semisimple"
NILPOTENT = "nilpotent"
FULL = "full"
OPERATOR_KINDS = (SEMISIMPLE, NILPOTENT, FULL)


@dataclass(frozen=True, order=True)
class EdgeLabel:
    """The weight t_j - t_k."""
    j: int
    k: int

    def __post_init__(self):
        if not self.j < self.k:
            raise NotAnEdge(f"label needs j < k, got ({self.j}, {self.k})")

    def __str__(self) -> str:
        return f"t{self.j}-t{self.k}"


@dataclass(frozen=True, order=True)
class Edge:
    """Edge stored at its canonical endpoint w, the one with w^{-1}(j) > w^{-1}(k)."""
    w: Permutation
    s: Transposition
    closure_contained: bool = True

    @property
    def label(self) -> EdgeLabel:
        return EdgeLabel(self.s.j, self.s.k)

    @property
    def other(self) -> Permutation:
        return apply_transposition(self.s, self.w)

    @property
    def endpoints(self) -> frozenset:
        return frozenset((self.w, self.other))


def _require_edge(w: Permutation, s: Transposition) -> None:
    if s.k > w.n:
        raise NotAnEdge(f"{s} does not act on S_{w.n}")
    if not w.inv(s.j) > w.inv(s.k):
        raise NotAnEdge(f"{s} at {w}: need w^-1({s.j}) > w^-1({s.k})")


def full_flag_edges(n: int) -> list[Edge]:
    check_bound(n)
    edges = []
    for w in enumerate_permutations(n):
        for j in range(1, n + 1):
            for k in range(j + 1, n + 1):
                if w.inv(j) > w.inv(k):
                    edges.append(Edge(w, Transposition(j, k)))
    return edges


def semisimple_fixed_points(n: int, h: HessenbergFunction) -> list[Permutation]:
    """Every [w] is a fixed point of Hess(X, h) for X diagonal."""
    if h.n != n:
        raise HessmgError(f"h is defined on {h.n} points, not {n}")
    return list(enumerate_permutations(n))


def semisimple_edge_in_hess(w: Permutation, s: Transposition, h: HessenbergFunction) -> bool:
    _require_edge(w, s)
    return w.inv(s.j) <= h(w.inv(s.k))


def fixed_point_trace(w: Permutation, h: HessenbergFunction) -> list[tuple]:
    """Rows (i, w^{-1}(i), h(w^{-1}(i+1)), holds) of the nilpotent criterion."""
    return [(i, w.inv(i), h(w.inv(i + 1)), w.inv(i) <= h(w.inv(i + 1)))
            for i in range(1, w.n)]


def nilpotent_fixed_point(w: Permutation, h: HessenbergFunction) -> bool:
    return all(w.inv(i) <= h(w.inv(i + 1)) for i in range(1, w.n))


def nilpotent_fixed_point_alt(w: Permutation, h: HessenbergFunction) -> bool:
    """Column form: each w(i) != 1 has w(i) - 1 among w(1), ..., w(h(i))."""
    for i in range(1, w.n + 1):
        if w(i) == 1:
            continue
        if not any(w(k) == w(i) - 1 for k in range(1, h(i) + 1)):
            return False
    return True


def nilpotent_edge_closure_in_hess(w: Permutation, s: Transposition,
                                   h: HessenbergFunction) -> bool:
    """Whether the closed orbit through [w] and [s_{j,k} w] lies in Hess(N, h)."""
    _require_edge(w, s)
    n, j, k = w.n, s.j, s.k
    inv = w.inv
    if not nilpotent_fixed_point(w, h):
        return False
    if k != j + 1:
        if not inv(k) <= h(inv(j + 1)):
            return False
    elif not inv(j + 1) <= h(inv(j)):
        return False
    if k < n and not inv(j) <= h(inv(k + 1)):
        return False
    if not inv(k - 1) <= h(inv(k)):
        return False
    # j = 1: N v_{w^-1(k)} = e_{k-1} has no e_{j-1} term
    if j >= 2 and not inv(j - 1) <= h(inv(k)):
        return False
    return True


@dataclass
class MomentGraph:
    n: int
    h: HessenbergFunction
    operator_kind: str
    vertices: list = field(default_factory=list)
    edges: list = field(default_factory=list)

    def contained_edges(self) -> list[Edge]:
        return [e for e in self.edges if e.closure_contained]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "h": str(self.h),
            "operator": self.operator_kind,
            "vertices": [str(w) for w in self.vertices],
            "edges": [{"w": str(e.w), "s": [e.s.j, e.s.k], "label": str(e.label),
                       "closure_contained": e.closure_contained}
                      for e in self.edges],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "MomentGraph":
        edges = [Edge(Permutation.parse(e["w"]), Transposition(*e["s"]),
                      bool(e["closure_contained"])) for e in doc["edges"]]
        return cls(doc["n"], HessenbergFunction.parse(doc["h"]), doc["operator"],
                   [Permutation.parse(v) for v in doc["vertices"]], edges)

    def to_dot(self) -> str:
        lines = ["graph moment_graph {",
                 f'  graph [n={self.n}, h="{self.h}", operator="{self.operator_kind}"];']
        for w in self.vertices:
            lines.append(f'  "{w}";')
        for e in self.edges:
            flag = "true" if e.closure_contained else "false"
            lines.append(f'  "{e.w}" -- "{e.other}" [label="{e.label}", '
                         f's="{e.s.j},{e.s.k}", closure_contained={flag}];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_dot(cls, text: str) -> "MomentGraph":
        """Parse the DOT emitted by :meth:`to_dot` back into a graph."""
        header = re.search(r'graph \[n=(\d+), h="([\d,]+)", operator="(\w+)"\];', text)
        if header is None:
            raise HessmgError("DOT text lacks the moment-graph header")
        vertices = [Permutation.parse(m) for m in re.findall(r'^\s*"([\d,]+)";\s*$', text, re.M)]
        edges = []
        for w, _other, s, flag in re.findall(
                r'"([\d,]+)" -- "([\d,]+)" \[label="[^"]*", s="(\d+,\d+)", '
                r'closure_contained=(true|false)\];', text):
            edges.append(Edge(Permutation.parse(w), Transposition.parse(s), flag == "true"))
        return cls(int(header.group(1)), HessenbergFunction.parse(header.group(2)),
                   header.group(3), vertices, edges)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2) + "\n"


def moment_graph(n: int, h: HessenbergFunction, operator_kind: str,
                 include_rejected: bool = False) -> MomentGraph:
    """Vertices and closure edges of the moment graph.

    By default only edges whose closure lies in the variety are listed; with
    ``include_rejected`` every full-flag edge incident to a vertex is kept,
    flagged ``closure_contained=False`` where the criterion fails.
    """
    if operator_kind not in OPERATOR_KINDS:
        raise HessmgError(f"operator kind must be one of {OPERATOR_KINDS}")
    if h.n != n:
        raise HessmgError(f"h is defined on {h.n} points, not {n}")
    check_bound(n)
    if operator_kind == NILPOTENT:
        vertices = [w for w in enumerate_permutations(n) if nilpotent_fixed_point(w, h)]
        test = nilpotent_edge_closure_in_hess
    else:
        vertices = list(enumerate_permutations(n))
        test = semisimple_edge_in_hess if operator_kind == SEMISIMPLE else None
    vertex_set = set(vertices)
    edges = []
    for e in full_flag_edges(n):
        ok = True if test is None else test(e.w, e.s, h)
        if ok:
            edges.append(e)
        elif include_rejected and (e.w in vertex_set or e.other in vertex_set):
            edges.append(Edge(e.w, e.s, False))
    edges.sort()
    return MomentGraph(n, h, operator_kind, sorted(vertices), edges)
