import math
from fractions import Fraction

import pytest

from groverwalk.exceptions import InvalidParameterError
from groverwalk.families import (
    complete_bipartite,
    cycle_graph,
    path_graph,
    two_tail_graph,
)
from groverwalk.graphs import Arc, build_graph
from groverwalk.linalg import RationalMatrix, charpoly_exact, mat_mul, mat_pow
from groverwalk.walk import (
    build_grover_operator,
    build_transition_matrix,
    spectral_map_check,
    symmetrize,
    transition_spectrum,
)

from oracles import oracle_grover_matrix


def test_p2_operator_is_swap():
    op = build_grover_operator(path_graph(2))
    assert op.matrix == RationalMatrix([[0, 1], [1, 0]])
    assert mat_pow(op.matrix, 2).is_identity()


def test_c3_operator_is_permutation():
    # degree 2 everywhere: the coin is trivial and the walk just shifts arcs
    op = build_grover_operator(cycle_graph(3))
    for i in range(6):
        row = [op.matrix[i, j] for j in range(6)]
        assert sorted(row) == [0, 0, 0, 0, 0, 1]
        assert op.matrix[i, i] == 0


def test_star_rows():
    op = build_grover_operator(complete_bipartite(1, 3))
    hub_rows = [i for i, a in enumerate(op.arcs) if a.origin == 0]
    for i in hub_rows:
        row = sorted(op.matrix[i, j] for j in range(len(op.arcs)))
        nonzero = [x for x in row if x != 0]
        assert nonzero == [Fraction(-1, 3), Fraction(2, 3), Fraction(2, 3)]
    assert all(s == 1 for s in op.matrix.row_sums())


def test_arc_index_lookup():
    op = build_grover_operator(cycle_graph(4))
    for i, arc in enumerate(op.arcs):
        assert op.arc_index(arc) == i
    assert op.arcs[op.arc_index(Arc(1, 0))] == Arc(1, 0)


@pytest.mark.parametrize(
    "g",
    [
        cycle_graph(3),
        cycle_graph(6),
        path_graph(4),
        complete_bipartite(2, 3),
        two_tail_graph(3, 2),
        build_graph(4, [(0, 1), (1, 2), (2, 0), (0, 3)]),
    ],
    ids=["C3", "C6", "P4", "K23", "TT32", "paw"],
)
def test_operator_orthogonal_row_stochastic(g):
    op = build_grover_operator(g)
    assert mat_mul(op.matrix, op.matrix.transpose()).is_identity()
    assert all(s == 1 for s in op.matrix.row_sums())
    assert all(s == 1 for s in build_transition_matrix(g).matrix.row_sums())


def test_operator_determinant_unit():
    for g in (cycle_graph(3), path_graph(3), complete_bipartite(2, 2)):
        cp = charpoly_exact(build_grover_operator(g).matrix)
        assert abs(cp[0]) == 1


def test_operator_matches_oracle():
    cases = [
        (2, [(0, 1)]),
        (3, [(0, 1), (1, 2), (0, 2)]),
        (4, [(0, 1), (1, 2), (2, 3), (0, 3)]),
        (4, [(0, 1), (1, 2), (2, 0), (0, 3)]),
        (5, [(0, 1), (0, 2), (0, 3), (0, 4)]),
        (7, list(two_tail_graph(3, 2).edges)),
    ]
    for n, edges in cases:
        got = build_grover_operator(build_graph(n, edges)).matrix
        want = oracle_grover_matrix(n, edges)
        assert tuple(tuple(row) for row in got.entries) == want


def test_transition_hub_row():
    g = two_tail_graph(3, 1)
    t = build_transition_matrix(g).matrix
    hub = [t[0, v] for v in range(g.n)]
    assert hub.count(Fraction(1, 4)) == 4
    assert hub.count(0) == 1


def test_transition_entries_c3():
    t = build_transition_matrix(cycle_graph(3)).matrix
    for u in range(3):
        for v in range(3):
            want = Fraction(1, 2) if u != v else 0
            assert t[u, v] == want


def test_symmetrize_p3():
    s = symmetrize(path_graph(3))
    assert abs(s[0][1] - 1 / math.sqrt(2)) < 1e-15
    assert s[0][2] == 0.0
    assert s == [list(row) for row in zip(*s)]


def test_transition_spectrum_c5():
    spec = transition_spectrum(cycle_graph(5))
    want = sorted(math.cos(2 * math.pi * j / 5) for j in range(5))
    assert max(abs(a - b) for a, b in zip(spec.values, want)) < 1e-10


def test_single_vertex_rejected():
    g = build_graph(1, [])
    with pytest.raises(InvalidParameterError):
        build_grover_operator(g)
    with pytest.raises(InvalidParameterError):
        build_transition_matrix(g)
    with pytest.raises(InvalidParameterError):
        symmetrize(g)


def test_spectral_map_p2():
    report = spectral_map_check(path_graph(2))
    assert report.matched
    assert report.predicted == 2
    assert report.unexplained == 0


def test_spectral_map_c3():
    # 3 vertex eigenvalues (1, -1/2, -1/2) map to 5 arc roots; the sixth
    # arc eigenvalue is an extra +1
    report = spectral_map_check(cycle_graph(3))
    assert report.matched
    assert report.predicted == 5
    assert report.unexplained == 1
    assert report.plus_one_extra == 1
    assert report.minus_one_extra == 0
    assert report.max_residual < 1e-10


def test_spectral_map_k23():
    g = complete_bipartite(2, 3)
    report = spectral_map_check(g)
    assert report.matched
    assert report.unexplained == report.plus_one_extra + report.minus_one_extra
    assert len(report.residual_pairs) == report.predicted


def test_spectral_map_residual_pairs_shape():
    report = spectral_map_check(cycle_graph(4))
    for (re, im), residual in report.residual_pairs:
        assert abs(complex(re, im)) == pytest.approx(1.0, abs=1e-9)
        assert residual <= report.max_residual
