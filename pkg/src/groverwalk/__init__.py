"""Exact-arithmetic Grover walks on small graphs.

Builds the arc-space walk operator of a finite simple connected graph over
the rationals, decides whether the walk is periodic, and exposes the
matching-sum identities and spectral checks used to corroborate that odd
periods occur only on odd cycles.
"""

from .census import CensusRecord, CensusResult, run_census
from .exceptions import (
    BudgetExceededError,
    CapExceededError,
    DimensionMismatchError,
    DisconnectedError,
    DuplicateEdgeError,
    EmptyGraphError,
    GroverWalkError,
    IndexOutOfRangeError,
    InvalidParameterError,
    LoopEdgeError,
    NoConvergenceError,
    NonSquareError,
    NotSymmetricError,
    ParseError,
    ResidualExceededError,
    ShapeMismatchError,
)
from .families import (
    FamilySpec,
    canonical_form,
    complete_bipartite,
    cycle_graph,
    enumerate_connected,
    enumerate_odd_unicyclic,
    make_family,
    parse_family,
    path_graph,
    two_tail_graph,
)
from .graphs import (
    Arc,
    Classification,
    Graph,
    UnicycleDecomposition,
    build_graph,
    classify,
    edge_weight,
    enumerate_matchings,
    read_graph_file,
    unicycle_decomposition,
    write_graph_file,
)
from .linalg import (
    CharPoly,
    RationalMatrix,
    Spectrum,
    charpoly_exact,
    eigenvalues_symmetric,
    is_integer,
    mat_mul,
    mat_pow,
)
from .periodicity import (
    BranchFrame,
    ChebyshevReport,
    DegreeConditionVerdict,
    IntegralityInstance,
    PeriodReport,
    branch_frame,
    branch_integrality_instances,
    chebyshev_eigen_check,
    chebyshev_table,
    cycle_matching_identity_check,
    degree_condition_filter,
    detect_rational_angle,
    find_period,
    graph_hash,
    integrality_filter,
    lockstep_chain_length,
    matching_split_check,
    matching_sum,
    odd_period_query,
    tail_recurrence_check,
)
from .walk import (
    GroverOperator,
    SpectralMapReport,
    TransitionMatrix,
    build_grover_operator,
    build_transition_matrix,
    spectral_map_check,
    symmetrize,
    transition_spectrum,
)

__version__ = "0.1.0"

__all__ = [
    "Arc",
    "BranchFrame",
    "BudgetExceededError",
    "CapExceededError",
    "CensusRecord",
    "CensusResult",
    "CharPoly",
    "ChebyshevReport",
    "Classification",
    "DegreeConditionVerdict",
    "DimensionMismatchError",
    "DisconnectedError",
    "DuplicateEdgeError",
    "EmptyGraphError",
    "FamilySpec",
    "Graph",
    "GroverOperator",
    "GroverWalkError",
    "IndexOutOfRangeError",
    "IntegralityInstance",
    "InvalidParameterError",
    "LoopEdgeError",
    "NoConvergenceError",
    "NonSquareError",
    "NotSymmetricError",
    "ParseError",
    "PeriodReport",
    "RationalMatrix",
    "ResidualExceededError",
    "ShapeMismatchError",
    "SpectralMapReport",
    "Spectrum",
    "TransitionMatrix",
    "UnicycleDecomposition",
    "branch_frame",
    "branch_integrality_instances",
    "build_graph",
    "build_grover_operator",
    "build_transition_matrix",
    "canonical_form",
    "charpoly_exact",
    "chebyshev_eigen_check",
    "chebyshev_table",
    "classify",
    "complete_bipartite",
    "cycle_graph",
    "cycle_matching_identity_check",
    "degree_condition_filter",
    "detect_rational_angle",
    "edge_weight",
    "eigenvalues_symmetric",
    "enumerate_connected",
    "enumerate_matchings",
    "enumerate_odd_unicyclic",
    "find_period",
    "graph_hash",
    "integrality_filter",
    "is_integer",
    "lockstep_chain_length",
    "make_family",
    "mat_mul",
    "mat_pow",
    "matching_split_check",
    "matching_sum",
    "odd_period_query",
    "parse_family",
    "path_graph",
    "read_graph_file",
    "run_census",
    "spectral_map_check",
    "symmetrize",
    "tail_recurrence_check",
    "transition_spectrum",
    "two_tail_graph",
    "unicycle_decomposition",
    "write_graph_file",
]
