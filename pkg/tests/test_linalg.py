import math
import random
from fractions import Fraction

import pytest

from groverwalk.exceptions import (
    DimensionMismatchError,
    InvalidParameterError,
    NonSquareError,
    NotSymmetricError,
)
from groverwalk.families import cycle_graph
from groverwalk.linalg import (
    CharPoly,
    RationalMatrix,
    charpoly_exact,
    eigenvalues_symmetric,
    is_integer,
    mat_mul,
    mat_pow,
)
from groverwalk.walk import build_transition_matrix, symmetrize

from oracles import char_value


def random_rational_matrix(rng, n):
    return RationalMatrix(
        [
            [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(n)]
            for _ in range(n)
        ]
    )


def test_is_integer():
    assert is_integer(Fraction(4, 2))
    assert is_integer(Fraction(0))
    assert not is_integer(Fraction(-4, 3))


def test_matrix_basics():
    m = RationalMatrix([[1, 2], [3, 4]])
    assert m[0, 1] == 2
    assert m.trace() == 5
    assert m.transpose()[1, 0] == 2
    assert m.row_sums() == (Fraction(3), Fraction(7))
    assert RationalMatrix.identity(3).is_identity()
    assert not m.is_identity()


def test_matrix_errors():
    with pytest.raises(DimensionMismatchError):
        RationalMatrix([[1, 2], [3]])
    with pytest.raises(InvalidParameterError):
        RationalMatrix([])
    a = RationalMatrix([[1, 2, 3], [4, 5, 6]])
    with pytest.raises(DimensionMismatchError):
        mat_mul(a, a)
    with pytest.raises(NonSquareError):
        charpoly_exact(a)


def test_mat_pow_identity():
    eye = RationalMatrix.identity(4)
    assert mat_pow(eye, 7) == eye
    m = RationalMatrix([[0, 1], [1, 0]])
    assert mat_pow(m, 0) == RationalMatrix.identity(2)
    assert mat_pow(m, 2) == RationalMatrix.identity(2)


def test_mat_pow_additivity():
    rng = random.Random(7)
    for _ in range(5):
        m = random_rational_matrix(rng, 3)
        for i in range(0, 5):
            for j in range(0, 5):
                assert mat_pow(m, i + j) == mat_mul(mat_pow(m, i), mat_pow(m, j))


def test_charpoly_known_values():
    zero_cp = charpoly_exact(RationalMatrix.zeros(2, 2))
    assert zero_cp.degree == 2
    assert zero_cp[0] == 0 and zero_cp[1] == 0 and zero_cp[2] == 1

    cp = charpoly_exact(RationalMatrix([[0, 1], [1, 0]]))
    assert cp[0] == -1 and cp[1] == 0 and cp[2] == 1

    cp = charpoly_exact(build_transition_matrix(cycle_graph(3)).matrix)
    assert cp[0] == Fraction(-1, 4)
    assert cp[1] == Fraction(-3, 4)
    assert cp[2] == 0
    assert cp[3] == 1


def test_charpoly_trace_relation():
    rng = random.Random(11)
    for _ in range(10):
        m = random_rational_matrix(rng, 4)
        cp = charpoly_exact(m)
        assert cp[3] == -m.trace()


def test_charpoly_permutation_similarity():
    rng = random.Random(3)
    m = random_rational_matrix(rng, 4)
    perm = [2, 0, 3, 1]
    permuted = RationalMatrix(
        [[m[perm[i], perm[j]] for j in range(4)] for i in range(4)]
    )
    assert charpoly_exact(m).coeffs == charpoly_exact(permuted).coeffs


def test_charpoly_against_bareiss_oracle():
    rng = random.Random(20260816)
    points = [Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(3)]
    for _ in range(200):
        m = random_rational_matrix(rng, 4)
        cp = charpoly_exact(m)
        for x in points:
            assert cp.eval_exact(x) == char_value(m.entries, x)


def test_charpoly_eval_and_multiplicity():
    # (x - 1)^2 (x + 2)
    cp = CharPoly((Fraction(2), Fraction(-3), Fraction(0), Fraction(1)))
    assert cp.eval_exact(Fraction(1)) == 0
    assert cp.root_multiplicity(Fraction(1)) == 2
    assert cp.root_multiplicity(Fraction(-2)) == 1
    assert cp.root_multiplicity(Fraction(5)) == 0


def test_eigen_diag():
    spec = eigenvalues_symmetric([[3.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 2.0]])
    assert [round(v) for v in spec.values] == [1, 2, 3]


def test_eigen_c3():
    spec = eigenvalues_symmetric(symmetrize(cycle_graph(3)))
    want = [-0.5, -0.5, 1.0]
    assert max(abs(a - b) for a, b in zip(spec.values, want)) < 1e-10


def test_eigen_c5_closed_form():
    spec = eigenvalues_symmetric(symmetrize(cycle_graph(5)))
    want = sorted(math.cos(2 * math.pi * j / 5) for j in range(5))
    assert max(abs(a - b) for a, b in zip(spec.values, want)) < 1e-10


def test_eigen_not_symmetric():
    with pytest.raises(NotSymmetricError):
        eigenvalues_symmetric([[0.0, 1.0], [0.5, 0.0]])


def test_eigen_trace_sum():
    rng = random.Random(5)
    for _ in range(5):
        base = [[rng.uniform(-1, 1) for _ in range(6)] for _ in range(6)]
        sym = [
            [(base[i][j] + base[j][i]) / 2 for j in range(6)] for i in range(6)
        ]
        spec = eigenvalues_symmetric(sym)
        assert abs(sum(spec.values) - sum(sym[i][i] for i in range(6))) < 1e-9


def test_eigen_residuals():
    sym = symmetrize(cycle_graph(6))
    spec = eigenvalues_symmetric(sym)
    size = len(sym)
    scale = max(abs(x) for row in sym for x in row)
    for lam, vec in zip(spec.values, spec.vectors):
        for i in range(size):
            image = sum(sym[i][j] * vec[j] for j in range(size))
            assert abs(image - lam * vec[i]) <= 1e-10 * max(scale, 1.0)
