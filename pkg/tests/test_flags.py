import pytest

from hessmg.combinatorics import HessenbergFunction, Permutation
from hessmg.errors import BadIndices, NotAFlag, ZeroParameter
from hessmg.flags import (ORACLES, FlagMatrix, LinearOperator, all_verdicts,
                          hessenberg_space_contains, membership_rank, one_parameter_flag,
                          parse_operator, permutation_flag)
from hessmg.linalg import RMatrix, random_invertible, unit_vector

N = LinearOperator.regular_nilpotent()
H233 = HessenbergFunction((2, 3, 3))


def test_permutation_flag_examples():
    assert permutation_flag(Permutation((1, 2, 3))).matrix == RMatrix.identity(3)
    e = [unit_vector(3, i) for i in (1, 2, 3)]
    assert permutation_flag(Permutation((1, 3, 2))).matrix.columns() == [e[0], e[2], e[1]]
    assert permutation_flag(Permutation((3, 2, 1))).matrix.columns() == [e[2], e[1], e[0]]


def test_one_parameter_flag_examples():
    g = one_parameter_flag(2, 3, 1, Permutation((1, 3, 2)))
    expected = [[1, 0, 0], [0, 1, 1], [0, 1, 0]]
    assert g.matrix == RMatrix.from_rows(expected)
    assert one_parameter_flag(1, 2, 5, Permutation((2, 1))).matrix == \
        RMatrix.from_rows([[5, 1], [1, 0]])


def test_one_parameter_flag_errors():
    with pytest.raises(ZeroParameter):
        one_parameter_flag(1, 2, 0, Permutation((2, 1)))
    with pytest.raises(BadIndices):
        one_parameter_flag(2, 1, 1, Permutation((2, 1)))


def test_singular_matrix_is_not_a_flag():
    with pytest.raises(NotAFlag):
        FlagMatrix(RMatrix.from_rows([[1, 1], [1, 1]]))


def test_hessenberg_space_contains():
    upper = RMatrix.from_rows([[1, 2, 3], [0, 4, 5], [0, 0, 6]])
    for values in [(1, 2, 3), (2, 3, 3), (3, 3, 3)]:
        assert hessenberg_space_contains(upper, HessenbergFunction(values))
    assert hessenberg_space_contains(N.materialize(3), HessenbergFunction((1, 2, 3)))
    low = RMatrix.from_rows([[0, 0, 0], [0, 0, 0], [1, 0, 0]])
    assert not hessenberg_space_contains(low, H233)


def test_nilpotent_shape():
    assert N.materialize(3) == RMatrix.from_rows([[0, 1, 0], [0, 0, 1], [0, 0, 0]])


@pytest.mark.parametrize("g, expected", [
    (FlagMatrix(RMatrix.identity(3)), True),
    (permutation_flag(Permutation((2, 3, 1))), False),
    (one_parameter_flag(2, 3, 1, Permutation((1, 3, 2))), True),
])
def test_oracle_examples(g, expected):
    verdicts = all_verdicts(g, N, H233)
    assert set(verdicts) == set(ORACLES)
    assert all(v == expected for v in verdicts.values())


@pytest.mark.parametrize("values", [(1, 2, 3), (2, 3, 3), (2, 2, 3), (3, 3, 3)])
def test_oracles_agree_on_random_flags(values, rng):
    h = HessenbergFunction(values)
    for X in (N, LinearOperator.diagonal((1, 2, 3)), LinearOperator.diagonal((1, 1, 2))):
        for _ in range(15):
            g = random_invertible(rng, 3)
            assert len(set(all_verdicts(g, X, h).values())) == 1


def test_full_h_contains_everything(rng):
    h = HessenbergFunction.full(4)
    for _ in range(5):
        assert membership_rank(random_invertible(rng, 4), N, h)


def test_parse_operator():
    assert parse_operator("nilpotent", 3).materialize(3) == N.materialize(3)
    assert parse_operator("diag", 3).materialize(3) == \
        RMatrix.from_rows([[1, 0, 0], [0, 2, 0], [0, 0, 3]])
    X = parse_operator("diag:2,2,5", 3)
    assert not X.distinct and X.size == 3
