from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hessmg.combinatorics import (HessenbergFunction, Permutation,
                                  enumerate_hessenberg_functions, enumerate_permutations)
from hessmg.equivariant import (AS_WRITTEN, COROLLARY, I_SHIFT, INSKO, fixed_points_via_ideal,
                                g_generators, gtilde_generators, line_vanishing_check,
                                localization_factors, on_line, relation_report,
                                symmetric_ideal_generators)
from hessmg.errors import NotAFixedPoint, UnboundVariable
from hessmg.polynomial import Polynomial, ring_names
from hessmg.schemas import validate
from hessmg.torus import nilpotent_fixed_point

P = Permutation
H233 = HessenbergFunction((2, 3, 3))
X3 = ring_names(3, with_t=False)
X2T = ring_names(2)


def point(w):
    return {f"x{i}": w[i - 1] for i in range(1, len(w) + 1)}


# polynomial arithmetic

def test_polynomial_printing():
    x1, x2 = Polynomial.variables(("x1", "x2"))
    assert str((x1 - 1) * (x1 - x2 - 1)) == "x1^2-x1*x2-2*x1+x2+1"
    assert str(Polynomial(("x1",))) == "0"


def test_unbound_variable():
    x1, x2 = Polynomial.variables(("x1", "x2"))
    with pytest.raises(UnboundVariable):
        (x1 * x2).evaluate({"x1": 1})
    assert Polynomial.const(1, ("x1",)).evaluate({}) == 1


coeffs = st.integers(-5, 5)
monomials = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 2))
polys = st.dictionaries(monomials, coeffs, max_size=6).map(
    lambda terms: Polynomial(("x1", "x2", "t"), terms))
points = st.fixed_dictionaries({v: st.fractions(max_denominator=7).filter(lambda q: abs(q) < 10)
                                for v in ("x1", "x2", "t")})


@given(polys, polys, points)
def test_evaluation_is_a_ring_homomorphism(p, q, a):
    assert (p + q).evaluate(a) == p.evaluate(a) + q.evaluate(a)
    assert (p * q).evaluate(a) == p.evaluate(a) * q.evaluate(a)
    assert (p - q).evaluate(a) == p.evaluate(a) - q.evaluate(a)


@given(polys)
def test_zero_coefficients_are_dropped(p):
    assert (p - p).is_zero() and (p - p).terms == {}


# generator families

def test_gtilde_running_example():
    x1, x2, x3 = Polynomial.variables(X3)
    g1, g2, g3 = (g.expanded for g in gtilde_generators(H233))
    assert g1 == (x1 - 1) * (x1 - x2 - 1)
    assert g2 == (x2 - 2) * (x2 - x3 - 1) * (x1 - x2 - 1)
    assert g3 == (x3 - 3) * (x2 - x3 - 1)


def test_gtilde_n2_full():
    x1, x2 = Polynomial.variables(ring_names(2, with_t=False))
    g1, g2 = (g.expanded for g in gtilde_generators(HessenbergFunction((2, 2))))
    assert g1 == (x1 - 1) * (x1 - x2 - 1)
    assert g2 == (x2 - 2) * (x1 - x2 - 1)


@pytest.mark.parametrize("n", range(1, 6))
def test_gtilde_minimal_h_is_linear(n):
    names = ring_names(n, with_t=False)
    xs = Polynomial.variables(names)
    gens = gtilde_generators(HessenbergFunction.minimal(n))
    assert [g.expanded for g in gens] == [xs[i] - (i + 1) for i in range(n)]
    assert fixed_points_via_ideal(HessenbergFunction.minimal(n)) == [Permutation.identity(n)]


def test_evaluate_examples():
    g1 = gtilde_generators(H233)[0]
    assert g1.evaluate(point((1, 2, 3))) == 0
    assert g1.evaluate(point((2, 3, 1))) == -2


def test_fixed_points_via_ideal_examples():
    assert [str(w) for w in fixed_points_via_ideal(H233)] == ["1,2,3", "1,3,2", "2,1,3", "3,2,1"]
    assert fixed_points_via_ideal(HessenbergFunction.minimal(3)) == [Permutation.identity(3)]
    assert len(fixed_points_via_ideal(HessenbergFunction.full(3))) == 6


@pytest.mark.parametrize("n", range(1, 4))
def test_ideal_matches_criterion_small_n(n):
    for h in enumerate_hessenberg_functions(n):
        expected = [w for w in enumerate_permutations(n) if nilpotent_fixed_point(w, h)]
        assert fixed_points_via_ideal(h) == expected


def test_ideal_false_positive_at_n4():
    # The generator product admits w = 4,3,2,1 for h = 2,2,4,4 although it is not fixed.
    h = HessenbergFunction((2, 2, 4, 4))
    w = P((4, 3, 2, 1))
    assert w in fixed_points_via_ideal(h)
    assert not nilpotent_fixed_point(w, h)


def test_g_generators():
    x1, x2, t = Polynomial.variables(X2T)
    g1, g2 = (g.expanded for g in g_generators(2))
    assert g1 == (x1 - t) * (x1 - x2 - t)
    assert g2 == (x2 - 2 * t) * (x1 - x2 - t)
    x1_, t_ = Polynomial.variables(ring_names(1))
    assert g_generators(1)[0].expanded == x1_ - t_
    x = Polynomial.variables(ring_names(3))
    g3 = g_generators(3)[2]
    assert g3.factors[1:] == (x[0] - x[1] - x[3], x[0] - x[2] - x[3], x[1] - x[2] - x[3])


def test_symmetric_generators():
    x1, x2, t = Polynomial.variables(X2T)
    e1, e2 = (g.expanded for g in symmetric_ideal_generators(2))
    assert e1 == x1 + x2 - 3 * t
    assert e2 == x1 * x2 - 2 * t ** 2


@pytest.mark.parametrize("n", range(1, 6))
def test_symmetric_generators_vanish_on_lines(n):
    gens = symmetric_ideal_generators(n)
    for w in enumerate_permutations(n):
        assert all(on_line(g.expanded, w).is_zero() for g in gens)
    if n >= 2:
        diagonal = {**{f"x{i}": Fraction(7) for i in range(1, n + 1)}, "t": Fraction(7)}
        assert gens[1].evaluate(diagonal) != 0


def test_generators_factor_consistently():
    for h in enumerate_hessenberg_functions(4):
        assert all(g.consistent() for g in gtilde_generators(h))
    assert all(g.consistent() for g in g_generators(4))


# localization

@pytest.mark.parametrize("n", range(1, 5))
def test_full_h_localization_is_one(n):
    h = HessenbergFunction.full(n)
    for w in enumerate_permutations(n):
        for mode in (INSKO, COROLLARY):
            for coeff in (AS_WRITTEN, I_SHIFT):
                loc = localization_factors(w, h, mode, coeff)
                assert loc.factors == [] and loc.product == Polynomial.const(1, ("t",))


def test_localization_identity_pair():
    loc = localization_factors(Permutation.identity(3), H233, INSKO)
    assert loc.pairs == [(3, 1)]
    assert str(loc.product) == "t"
    assert str(localization_factors(Permutation.identity(3), H233, INSKO, I_SHIFT).product) == "3*t"


def test_localization_non_fixed():
    w = P((2, 3, 1))
    loc = localization_factors(w, H233, INSKO)
    assert loc.is_zero_class and loc.product.is_zero()
    with pytest.raises(NotAFixedPoint):
        localization_factors(w, H233, COROLLARY)


# diagnostic reports

def test_relation_report_examples():
    rows = relation_report(HessenbergFunction((2, 2)))
    validate(rows, "relation-report")
    assert all(r["match"] and r["lhs"] == r["rhs"] == "0" for r in rows)
    rows = relation_report(HessenbergFunction((1, 2)))
    row = next(r for r in rows if r["w"] == "2,1" and r["generator_index"] == 1)
    assert (row["lhs"], row["rhs"], row["match"]) == ("0", "t", False)


def test_line_check_reports():
    for h in enumerate_hessenberg_functions(3):
        report = line_vanishing_check(h)
        validate(report, "line-check")
        assert all(r["vanishes"] for r in report["rows"] if r["family"] == "en")
    report = line_vanishing_check(HessenbergFunction.minimal(3))
    assert report["ideal_fixed_points"] == ["1,2,3"]
