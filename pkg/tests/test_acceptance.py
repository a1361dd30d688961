"""Acceptance criteria, one test each; the run prints a PASS/FAILED line per criterion."""

import json
import random
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from hessmg.cli import main
from hessmg.combinatorics import (HessenbergFunction, Permutation, Transposition,
                                  apply_transposition, enumerate_hessenberg_functions,
                                  enumerate_permutations)
from hessmg.equivariant import (COROLLARY, INSKO, fixed_points_via_ideal, localization_factors,
                                on_line, symmetric_ideal_generators)
from hessmg.flags import (LinearOperator, all_verdicts, membership_rank, one_parameter_flag,
                          permutation_flag)
from hessmg.linalg import (cofactor_determinant, determinant, in_span, lemma_dependence,
                           random_invertible, random_matrix, random_rational)
from hessmg.polynomial import Polynomial
from hessmg.schemas import validate
from hessmg.torus import (full_flag_edges, nilpotent_edge_closure_in_hess,
                          nilpotent_fixed_point, nilpotent_fixed_point_alt,
                          semisimple_edge_in_hess)

pytestmark = pytest.mark.acceptance

N = LinearOperator.regular_nilpotent()
H233 = HessenbergFunction((2, 3, 3))
SAMPLES = 3


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, _ = capsys.readouterr()
    return code, out


def sampled_c(rng):
    values = []
    while len(values) < SAMPLES:
        c = random_rational(rng, nonzero=True)
        if c not in values:
            values.append(c)
    return values


def test_criterion_01_running_example(capsys):
    start = time.perf_counter()
    code, out = run_cli(capsys, "fixed-points", "--n", "3", "--h", "2,3,3",
                        "--operator", "nilpotent")
    assert code == 0
    assert set(out.split()) == {"1,2,3", "1,3,2", "2,1,3", "3,2,1"}
    assert len(out.split()) == 4
    code, out = run_cli(capsys, "moment-graph", "--n", "3", "--h", "2,3,3",
                        "--operator", "nilpotent", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    pairs = {frozenset((e["w"], str(apply_transposition(Transposition(*e["s"]),
                                                        Permutation.parse(e["w"])))))
             for e in doc["edges"]}
    assert len(doc["edges"]) == 3
    assert pairs == {frozenset(("1,2,3", "1,3,2")), frozenset(("1,2,3", "2,1,3")),
                     frozenset(("1,2,3", "3,2,1"))}
    assert time.perf_counter() - start < 1.0


def test_criterion_02_oracle_quadrilateral():
    start = time.perf_counter()
    disagreements = []
    for n in (2, 3, 4):
        operators = (N, LinearOperator.diagonal(range(1, n + 1)))
        for h in enumerate_hessenberg_functions(n):
            for w in enumerate_permutations(n):
                g = permutation_flag(w)
                for X in operators:
                    verdicts = all_verdicts(g, X, h)
                    if len(set(verdicts.values())) != 1:
                        disagreements.append((str(w), str(h), str(X), verdicts))
    assert disagreements == []
    assert time.perf_counter() - start < 300


def test_criterion_03_nilpotent_fixed_points():
    mismatches = []
    for n in (2, 3, 4):
        for h in enumerate_hessenberg_functions(n):
            for w in enumerate_permutations(n):
                if nilpotent_fixed_point(w, h) != membership_rank(permutation_flag(w), N, h):
                    mismatches.append(("oracle", str(w), str(h)))
    for n in range(1, 7):
        for h in enumerate_hessenberg_functions(n):
            for w in enumerate_permutations(n):
                if nilpotent_fixed_point(w, h) != nilpotent_fixed_point_alt(w, h):
                    mismatches.append(("alt", str(w), str(h)))
    assert mismatches == []


def test_criterion_04_semisimple_orbits():
    rng = random.Random(4)
    violations = []
    for n in (2, 3, 4):
        X = LinearOperator.diagonal(range(1, n + 1))
        for h in enumerate_hessenberg_functions(n):
            for e in full_flag_edges(n):
                cs = sampled_c(rng)
                oracle = [membership_rank(one_parameter_flag(e.s.j, e.s.k, c, e.w), X, h)
                          for c in cs]
                crit = semisimple_edge_in_hess(e.w, e.s, h)
                if crit and not all(oracle) or not crit and all(oracle):
                    violations.append((str(e.w), str(e.s), str(h), [str(c) for c in cs]))
    assert violations == []


def test_criterion_05_nilpotent_closures():
    rng = random.Random(5)
    violations = []
    for n in (2, 3, 4):
        for h in enumerate_hessenberg_functions(n):
            for e in full_flag_edges(n):
                if not nilpotent_edge_closure_in_hess(e.w, e.s, h):
                    continue
                if not (nilpotent_fixed_point(e.w, h) and nilpotent_fixed_point(e.other, h)):
                    violations.append(("endpoint", str(e.w), str(e.s), str(h)))
                for c in sampled_c(rng):
                    g = one_parameter_flag(e.s.j, e.s.k, c, e.w)
                    if not membership_rank(g, N, h):
                        violations.append(("orbit", str(e.w), str(e.s), str(h), str(c)))
    assert violations == []
    verdicts = {
        ((1, 3, 2), (2, 3)): True,
        ((2, 1, 3), (1, 2)): True,
        ((3, 2, 1), (1, 3)): True,
        ((3, 2, 1), (1, 2)): False,
        ((3, 2, 1), (2, 3)): False,
    }
    for (w, s), expected in verdicts.items():
        assert nilpotent_edge_closure_in_hess(Permutation(w), Transposition(*s), H233) is expected


def test_criterion_06_ideal_fixed_points():
    start = time.perf_counter()
    mismatches = []
    for n in range(1, 6):
        for h in enumerate_hessenberg_functions(n):
            expected = {w for w in enumerate_permutations(n) if nilpotent_fixed_point(w, h)}
            got = set(fixed_points_via_ideal(h))
            for w in sorted(got ^ expected):
                mismatches.append((str(h), str(w), w in got))
    elapsed = time.perf_counter() - start
    assert mismatches == [], f"{len(mismatches)} mismatches, first: {mismatches[:3]}"
    assert elapsed < 120


def test_criterion_07_symmetric_ideal_lines():
    failures = []
    for n in range(1, 6):
        gens = symmetric_ideal_generators(n)
        for w in enumerate_permutations(n):
            for g in gens:
                if not on_line(g.expanded, w).is_zero():
                    failures.append((str(w), g.index))
        if n >= 2:
            t = Polynomial.var("t", ("t",))
            diagonal = gens[1].expanded.substitute(
                {f"x{i}": t for i in range(1, n + 1)} | {"t": t}, ("t",))
            if diagonal.is_zero():
                failures.append(("witness", n))
    assert failures == []


def test_criterion_08_localization_structure(capsys, tmp_path):
    failures = []
    one = Polynomial.const(1, ("t",))
    for n in range(1, 5):
        full = HessenbergFunction.full(n)
        for w in enumerate_permutations(n):
            for mode in (INSKO, COROLLARY):
                if localization_factors(w, full, mode).product != one:
                    failures.append(("full", str(w), mode))
        for h in enumerate_hessenberg_functions(n):
            for w in enumerate_permutations(n):
                if not nilpotent_fixed_point(w, h):
                    loc = localization_factors(w, h, INSKO)
                    if not (loc.is_zero_class and loc.product.is_zero()):
                        failures.append(("zero", str(w), str(h)))
            for command, schema in (("relation-report", "relation-report"),
                                    ("line-check", "line-check")):
                path = tmp_path / f"{command}-{h}.json"
                code, _ = run_cli(capsys, command, "--h", str(h), "--output", str(path))
                if code != 0:
                    failures.append((command, str(h), code))
                    continue
                validate(json.loads(path.read_text()), schema)
    assert failures == []


def test_criterion_09_exact_arithmetic():
    failures = []
    rng = random.Random(9)
    for n in range(2, 7):
        for trial in range(200):
            M = random_matrix(rng, n)
            if determinant(M) != cofactor_determinant(M):
                failures.append(("det", n, trial))
    rng = random.Random(10)
    for n in range(1, 6):
        for trial in range(100):
            basis = random_invertible(rng, n).columns()
            j = rng.randint(1, n)
            if trial % 2:
                coeffs = [Fraction(rng.randint(-4, 4)) for _ in range(j)]
                coeffs[rng.randrange(j)] = Fraction(rng.randint(1, 4))
                v = [sum(c * b[r] for c, b in zip(coeffs, basis)) for r in range(n)]
            else:
                v = [random_rational(rng) for _ in range(n)]
            if not any(v):
                v[0] = Fraction(1)
            if lemma_dependence(basis, v, j) != in_span(basis[:j], v):
                failures.append(("lemma", n, trial))
    assert failures == []


def test_criterion_10_determinism():
    argv = [sys.executable, "-m", "hessmg", "verify", "--max-n", "4", "--seed", "7"]
    first = subprocess.run(argv, capture_output=True)
    second = subprocess.run(argv, capture_output=True)
    assert first.stdout and first.returncode in (0, 2)
    assert first.stdout == second.stdout
