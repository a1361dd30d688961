"""
Exhaustive and seeded verification harness.

Every invariant family is a function ``check_*(ctx, check)`` that records cases
and counterexamples on a :class:`Check`. Diagnostics use the same machinery
but never make the report fail. Each family draws from its own PRNG seeded
with ``f"{seed}:{name}"``, so results do not depend on the order families run in.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import combinatorics as cb
from . import equivariant as eq
from . import flags as fl
from . import linalg as la
from . import torus as tg
from .polynomial import Polynomial, ring_names

MAX_LISTED_FAILURES = 25

PERMUTATION_EXHAUSTIVE_MAX = 6
ORACLE_EXHAUSTIVE_MAX = 4
IDEAL_EXHAUSTIVE_MAX = 5
DETERMINANT_TRIALS = 200
LEMMA_TRIALS = 100
RANDOM_FLAGS = 200


@dataclass
class Check:
    name: str
    diagnostic: bool = False
    cases_run: int = 0
    failure_count: int = 0
    failures: list = field(default_factory=list)
    summary: dict = field(default_factory=dict)
    elapsed: float = 0.0

    def case(self, ok: bool, **reproducer) -> bool:
        self.cases_run += 1
        if not ok:
            self.failure_count += 1
            if len(self.failures) < MAX_LISTED_FAILURES:
                self.failures.append({k: _plain(v) for k, v in reproducer.items()})
        return ok

    def to_json(self, timings: bool) -> dict:
        doc = {"name": self.name, "cases_run": self.cases_run,
               "failure_count": self.failure_count, "failures": self.failures}
        if self.summary:
            doc["summary"] = self.summary
        if timings:
            doc["elapsed"] = round(self.elapsed, 6)
        return doc


def _plain(v):
    if isinstance(v, (cb.Permutation, cb.HessenbergFunction, cb.Transposition, Fraction)):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    if isinstance(v, dict):
        return {k: _plain(x) for k, x in v.items()}
    return v


@dataclass
class Context:
    max_n: int
    seed: int
    samples: int
    all_h: bool

    def rng(self, name: str) -> random.Random:
        return random.Random(f"{self.seed}:{name}")

    def hessenberg_functions(self, n: int) -> list[cb.HessenbergFunction]:
        if self.all_h:
            return list(cb.enumerate_hessenberg_functions(n))
        chosen = {cb.HessenbergFunction.minimal(n),
                  cb.HessenbergFunction(tuple(min(i + 1, n) for i in range(1, n + 1))),
                  cb.HessenbergFunction.full(n)}
        return sorted(chosen)

    def sizes(self, cap: int, start: int = 1) -> range:
        return range(start, min(self.max_n, cap) + 1)

    def parameters(self, rng: random.Random, count: int | None = None) -> list[Fraction]:
        """Distinct nonzero orbit parameters c."""
        count = self.samples if count is None else count
        out: list[Fraction] = []
        while len(out) < count:
            c = la.random_rational(rng, nonzero=True)
            if c not in out:
                out.append(c)
        return out


def _operators(n: int):
    return [("nilpotent", fl.LinearOperator.regular_nilpotent()),
            ("diag", fl.LinearOperator.diagonal(range(1, n + 1)))]


# core combinatorics

def check_hessenberg_catalan(ctx: Context, check: Check) -> None:
    for n in ctx.sizes(PERMUTATION_EXHAUSTIVE_MAX):
        hs = [h.values for h in cb.enumerate_hessenberg_functions(n)]
        check.case(len(hs) == cb.catalan(n) and hs == sorted(set(hs)),
                   n=n, count=len(hs), catalan=cb.catalan(n))


def check_permutation_involutions(ctx: Context, check: Check) -> None:
    for n in ctx.sizes(5):
        perms = list(cb.enumerate_permutations(n))
        inverses = {cb.inverse(w) for w in perms}
        check.case(len(inverses) == len(perms), n=n, property="inverse bijective")
        for w in perms:
            check.case(cb.inverse(cb.inverse(w)) == w, n=n, w=w, property="inverse involution")
            for j in range(1, n + 1):
                for k in range(j + 1, n + 1):
                    s = cb.Transposition(j, k)
                    check.case(cb.apply_transposition(s, cb.apply_transposition(s, w)) == w,
                               n=n, w=w, j=j, k=k, property="s s w = w")


# exact linear algebra

def check_determinant_cofactor(ctx: Context, check: Check) -> None:
    rng = ctx.rng(check.name)
    for n in range(2, max(2, min(ctx.max_n, 6)) + 1):
        for trial in range(DETERMINANT_TRIALS):
            M = la.random_matrix(rng, n)
            d, oracle = la.determinant(M), la.cofactor_determinant(M)
            check.case(d == oracle, n=n, trial=trial, seed=ctx.seed,
                       matrix=M.to_json()["entries"], determinant=d, cofactor=oracle)
            check.case((la.rank(M) == n) == (d != 0), n=n, trial=trial, seed=ctx.seed,
                       property="rank full iff det nonzero")


def check_lemma_dependence(ctx: Context, check: Check) -> None:
    rng = ctx.rng(check.name)
    for n in range(2, max(2, min(ctx.max_n, 5)) + 1):
        for trial in range(LEMMA_TRIALS):
            basis = la.random_invertible(rng, n).columns()
            j = rng.randint(1, n)
            if rng.random() < 0.5:
                # force v into span(v_1..v_j)
                coeffs = [la.random_rational(rng) for _ in range(j)]
                v = tuple(sum((c * b[r] for c, b in zip(coeffs, basis)), Fraction(0))
                          for r in range(n))
            else:
                v = la.vector(la.random_rational(rng) for _ in range(n))
            if all(x == 0 for x in v):
                continue
            check.case(la.lemma_dependence(basis, v, j) == la.in_span(basis[:j], v),
                       n=n, trial=trial, seed=ctx.seed, j=j)


# flag oracles

def _quad_case(check, g, X, h, **repro):
    verdicts = fl.all_verdicts(g, X, h)
    check.case(len(set(verdicts.values())) == 1, verdicts=verdicts, h=h, **repro)


def check_oracle_quadrilateral(ctx: Context, check: Check) -> None:
    rng = ctx.rng(check.name)
    for n in ctx.sizes(ORACLE_EXHAUSTIVE_MAX, start=2):
        hs = ctx.hessenberg_functions(n)
        perms = list(cb.enumerate_permutations(n))
        for opname, X in _operators(n):
            for h in hs:
                for w in perms:
                    _quad_case(check, fl.permutation_flag(w), X, h, n=n, w=w, operator=opname)
            for trial in range(RANDOM_FLAGS):
                h = rng.choice(hs)
                g = la.random_invertible(rng, n)
                _quad_case(check, g, X, h, n=n, operator=opname, seed=ctx.seed,
                           trial=trial, flag=g.to_json()["entries"])
                # same flag [w] through a random upper-triangular representative
                w = rng.choice(perms)
                b = la.RMatrix.from_rows([[la.random_rational(rng, nonzero=(i == j))
                                           if j >= i else 0 for j in range(n)]
                                          for i in range(n)])
                gb = fl.permutation_flag(w).matrix @ b
                _quad_case(check, gb, X, h, n=n, operator=opname, seed=ctx.seed,
                           trial=trial, w=w, flag=gb.to_json()["entries"])


def check_nilpotent_fixed_alt(ctx: Context, check: Check) -> None:
    for n in ctx.sizes(PERMUTATION_EXHAUSTIVE_MAX):
        for h in ctx.hessenberg_functions(n):
            for w in cb.enumerate_permutations(n):
                check.case(tg.nilpotent_fixed_point(w, h) == tg.nilpotent_fixed_point_alt(w, h),
                           n=n, w=w, h=h)


def check_nilpotent_fixed_oracle(ctx: Context, check: Check) -> None:
    N = fl.LinearOperator.regular_nilpotent()
    for n in ctx.sizes(ORACLE_EXHAUSTIVE_MAX):
        for h in ctx.hessenberg_functions(n):
            for w in cb.enumerate_permutations(n):
                crit = tg.nilpotent_fixed_point(w, h)
                check.case(crit == fl.membership_rank(fl.permutation_flag(w), N, h),
                           n=n, w=w, h=h, criterion=crit)


def check_semisimple_fixed_points(ctx: Context, check: Check) -> None:
    for n in ctx.sizes(ORACLE_EXHAUSTIVE_MAX):
        D = fl.LinearOperator.diagonal(range(1, n + 1))
        for h in ctx.hessenberg_functions(n):
            listed = set(tg.semisimple_fixed_points(n, h))
            for w in cb.enumerate_permutations(n):
                check.case(w in listed and fl.membership_rank(fl.permutation_flag(w), D, h),
                           n=n, w=w, h=h)


def check_semisimple_edges(ctx: Context, check: Check) -> None:
    rng = ctx.rng(check.name)
    for n in ctx.sizes(ORACLE_EXHAUSTIVE_MAX, start=2):
        D = fl.LinearOperator.diagonal(range(1, n + 1))
        for h in ctx.hessenberg_functions(n):
            for e in tg.full_flag_edges(n):
                j, k = e.s.j, e.s.k
                cs = ctx.parameters(rng)
                crit = tg.semisimple_edge_in_hess(e.w, e.s, h)
                oracle = [fl.membership_rank(fl.one_parameter_flag(j, k, c, e.w), D, h)
                          for c in cs]
                ok = all(oracle) if crit else not all(oracle)
                check.case(ok, n=n, w=e.w, h=h, j=j, k=k, c=cs, seed=ctx.seed,
                           criterion=crit, oracle=oracle)


def _closure_cases(ctx: Context, check: Check, converse: bool) -> None:
    rng = ctx.rng(check.name)
    N = fl.LinearOperator.regular_nilpotent()
    for n in ctx.sizes(ORACLE_EXHAUSTIVE_MAX, start=2):
        for h in ctx.hessenberg_functions(n):
            for e in tg.full_flag_edges(n):
                j, k = e.s.j, e.s.k
                cs = ctx.parameters(rng)
                crit = tg.nilpotent_edge_closure_in_hess(e.w, e.s, h)
                oracle = [fl.membership_rank(fl.one_parameter_flag(j, k, c, e.w), N, h)
                          for c in cs]
                if converse:
                    if not crit:
                        check.case(not all(oracle), n=n, w=e.w, h=h, j=j, k=k, c=cs,
                                   seed=ctx.seed, oracle=oracle)
                    continue
                if not crit:
                    continue
                ends =tg.nilpotent_fixed_point(e.w, h) and tg.nilpotent_fixed_point(e.other, h)
                check.case(ends and all(oracle), n=n, w=e.w, h=h, j=j, k=k, c=cs,
                           seed=ctx.seed, endpoints_fixed=ends, oracle=oracle)


def check_nilpotent_closure(ctx: Context, check: Check) -> None:
    _closure_cases(ctx, check, converse=False)


def check_nilpotent_closure_converse(ctx: Context, check: Check) -> None:
    _closure_cases(ctx, check, converse=True)


# equivariant algebra

def check_ideal_fixed_points(ctx: Context, check: Check) -> None:
    for n in ctx.sizes(IDEAL_EXHAUSTIVE_MAX):
        for h in ctx.hessenberg_functions(n):
            via_ideal = set(eq.fixed_points_via_ideal(h))
            for w in cb.enumerate_permutations(n):
                crit = tg.nilpotent_fixed_point(w, h)
                check.case((w in via_ideal) == crit, n=n, w=w, h=h,
                           in_ideal_zero_set=w in via_ideal, fixed_point=crit)


def check_symmetric_lines(ctx: Context, check: Check) -> None:
    for n in ctx.sizes(IDEAL_EXHAUSTIVE_MAX):
        gens = eq.symmetric_ideal_generators(n)
        for w in cb.enumerate_permutations(n):
            for g in gens:
                check.case(eq.on_line(g.expanded, w).is_zero(), n=n, w=w,
                           generator_index=g.index)
        if n >= 2:
            # (t, ..., t) is not on any line x = w t
            t = Polynomial.var("t", ("t",))
            diag = {f"x{i}": t for i in range(1, n + 1)}
            second = gens[1].expanded.substitute(diag, ("t",))
            check.case(not second.is_zero(), n=n, point="(t,...,t)", value=str(second))


def check_localization(ctx: Context, check: Check) -> None:
    one = Polynomial.const(1, ("t",))
    for n in ctx.sizes(ORACLE_EXHAUSTIVE_MAX):
        full = cb.HessenbergFunction.full(n)
        for w in cb.enumerate_permutations(n):
            for mode in eq.MODES:
                for coeff in eq.COEFFS:
                    loc = eq.localization_factors(w, full, mode, coeff)
                    check.case(loc.factors == [] and loc.product == one,
                               n=n, w=w, h=full, mode=mode, coeff=coeff)
        for h in ctx.hessenberg_functions(n):
            for w in cb.enumerate_permutations(n):
                if tg.nilpotent_fixed_point(w, h):
                    continue
                loc = eq.localization_factors(w, h, eq.INSKO)
                check.case(loc.is_zero_class and loc.product.is_zero(), n=n, w=w, h=h,
                           mode=eq.INSKO)
                try:
                    eq.localization_factors(w, h, eq.COROLLARY)
                    raised = False
                except eq.NotAFixedPoint:
                    raised = True
                check.case(raised, n=n, w=w, h=h, mode=eq.COROLLARY)


def check_generator_factorization(ctx: Context, check: Check) -> None:
    for n in ctx.sizes(IDEAL_EXHAUSTIVE_MAX):
        families = [("g", eq.g_generators(n)), ("en", eq.symmetric_ideal_generators(n))]
        families += [(f"gtilde[{h}]", eq.gtilde_generators(h))
                     for h in ctx.hessenberg_functions(n)]
        for name, gens in families:
            for g in gens:
                check.case(g.consistent(), n=n, family=name, generator_index=g.index)


def _random_polynomial(rng: random.Random, names, terms=5, max_exp=3) -> Polynomial:
    return Polynomial(names, {tuple(rng.randint(0, max_exp) for _ in names):
                              la.random_rational(rng) for _ in range(terms)})


def check_evaluation_homomorphism(ctx: Context, check: Check) -> None:
    rng = ctx.rng(check.name)
    for n in ctx.sizes(IDEAL_EXHAUSTIVE_MAX):
        names = ring_names(n)
        for trial in range(20):
            p, q = _random_polynomial(rng, names), _random_polynomial(rng, names)
            point = {v: la.random_rational(rng) for v in names}
            pa, qa = p.evaluate(point), q.evaluate(point)
            check.case((p + q).evaluate(point) == pa + qa, n=n, trial=trial,
                       seed=ctx.seed, op="+")
            check.case((p * q).evaluate(point) == pa * qa, n=n, trial=trial,
                       seed=ctx.seed, op="*")


# diagnostics (reported, never failing)

def diag_relation_report(ctx: Context, check: Check) -> None:
    mismatched = {}
    for n in ctx.sizes(ORACLE_EXHAUSTIVE_MAX):
        for h in ctx.hessenberg_functions(n):
            rows = eq.relation_report(h)
            for row in rows:
                check.case(row["match"], n=n, h=h, **row)
            bad = sum(not r["match"] for r in rows)
            if bad:
                mismatched[str(h)] = bad
    check.summary = {"mismatches_by_h": mismatched}


def diag_line_check(ctx: Context, check: Check) -> None:
    unequal = []
    for n in ctx.sizes(ORACLE_EXHAUSTIVE_MAX):
        for h in ctx.hessenberg_functions(n):
            report = eq.line_vanishing_check(h)
            check.case(report["sets_equal"], n=n, h=h,
                       vanishing_set=report["vanishing_set"],
                       ideal_fixed_points=report["ideal_fixed_points"])
            if not report["sets_equal"]:
                unequal.append(str(h))
    check.summary = {"h_with_unequal_sets": unequal}


def diag_repeated_eigenvalues(ctx: Context, check: Check) -> None:
    rng = ctx.rng(check.name)
    for n in ctx.sizes(ORACLE_EXHAUSTIVE_MAX, start=2):
        X = fl.LinearOperator.diagonal([1] * 2 + list(range(2, n)))
        for h in ctx.hessenberg_functions(n):
            for e in tg.full_flag_edges(n):
                cs = ctx.parameters(rng)
                crit = tg.semisimple_edge_in_hess(e.w, e.s, h)
                oracle = [fl.membership_rank(fl.one_parameter_flag(e.s.j, e.s.k, c, e.w), X, h)
                          for c in cs]
                check.case(crit == all(oracle), n=n, w=e.w, h=h, j=e.s.j, k=e.s.k,
                           eigenvalues=list(X.eigenvalues), criterion=crit, oracle=oracle)


CHECKS: list[tuple[str, Callable]] = [
    ("hessenberg_catalan", check_hessenberg_catalan),
    ("permutation_involutions", check_permutation_involutions),
    ("determinant_vs_cofactor", check_determinant_cofactor),
    ("lemma_dependence_vs_span", check_lemma_dependence),
    ("oracle_quadrilateral", check_oracle_quadrilateral),
    ("nilpotent_fixed_point_vs_alt", check_nilpotent_fixed_alt),
    ("nilpotent_fixed_point_vs_oracle", check_nilpotent_fixed_oracle),
    ("semisimple_fixed_points_vs_oracle", check_semisimple_fixed_points),
    ("semisimple_edge_vs_oracle", check_semisimple_edges),
    ("nilpotent_closure_implies_oracle", check_nilpotent_closure),
    ("nilpotent_closure_converse", check_nilpotent_closure_converse),
    ("ideal_fixed_points_vs_criterion", check_ideal_fixed_points),
    ("symmetric_ideal_lines", check_symmetric_lines),
    ("localization_structural", check_localization),
    ("generator_factorization", check_generator_factorization),
    ("evaluation_homomorphism", check_evaluation_homomorphism),
]

DIAGNOSTICS: list[tuple[str, Callable]] = [
    ("relation_report", diag_relation_report),
    ("line_check", diag_line_check),
    ("semisimple_repeated_eigenvalues", diag_repeated_eigenvalues),
]


def run_verification(max_n: int = 3, seed: int = 0, samples: int = 3, all_h: bool = False,
                     timings: bool = False, only: set[str] | None = None) -> dict:
    """Run every check family and assemble the report.

    The report is a pure function of the arguments unless ``timings`` is set.
    """
    cb.check_bound(max_n)
    if samples < 1:
        raise ValueError("samples must be >= 1")
    ctx = Context(max_n, seed, samples, all_h)
    checks, diagnostics = [], []
    for table, out, diagnostic in ((CHECKS, checks, False), (DIAGNOSTICS, diagnostics, True)):
        for name, fn in table:
            if only is not None and name not in only:
                continue
            check = Check(name, diagnostic)
            start = time.perf_counter()
            fn(ctx, check)
            check.elapsed = time.perf_counter() - start
            out.append(check)
    checks.sort(key=lambda c: c.name)
    diagnostics.sort(key=lambda c: c.name)
    return {
        "scope": {
            "max_n": max_n, "seed": seed, "samples": samples, "all_h": all_h,
            "operators": ["nilpotent", "diag:1..n"],
            "h_count": {str(n): len(ctx.hessenberg_functions(n))
                        for n in range(1, max_n + 1)},
            "limits": {"permutation_exhaustive": min(max_n, PERMUTATION_EXHAUSTIVE_MAX),
                       "oracle_exhaustive": min(max_n, ORACLE_EXHAUSTIVE_MAX),
                       "ideal_exhaustive": min(max_n, IDEAL_EXHAUSTIVE_MAX)},
        },
        "checks": [c.to_json(timings) for c in checks],
        "diagnostics": [c.to_json(timings) for c in diagnostics],
        "passed": all(c.failure_count == 0 for c in checks),
    }
