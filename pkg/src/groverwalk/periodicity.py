"""Period detection and the matching-sum identities that certify it.

A graph is periodic when some power of its arc evolution operator is the
identity; the period is the least such exponent. Detection runs in three
stages: an exact integrality filter that refutes most graphs outright, a
numeric spectral guess confirmed by exact matrix powers, and a bounded
exhaustive sweep as the fallback. Every "periodic" verdict carries an
exact certificate; "no period up to k_max" is an honest bound, not a
proof of aperiodicity.

The second half of the module verifies combinatorial identities between
characteristic-polynomial coefficients and weighted matching sums on
odd-unicyclic graphs, plus the Chebyshev eigenvector construction on the
two-tailed family. These back the structural argument for why odd periods
force the graph to be a bare odd cycle.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass
from fractions import Fraction

from .exceptions import (
    BudgetExceededError,
    IndexOutOfRangeError,
    InvalidParameterError,
    ResidualExceededError,
    ShapeMismatchError,
)
from .families import two_tail_graph
from .graphs import (
    Edge,
    Graph,
    UnicycleDecomposition,
    classify,
    edge_weight,
    enumerate_matchings,
    write_graph_file,
)
from .linalg import (
    CharPoly,
    RationalMatrix,
    charpoly_exact,
    is_integer,
    mat_mul,
    mat_pow,
)
from .walk import (
    build_grover_operator,
    build_transition_matrix,
    transition_spectrum,
)

DEFAULT_K_MAX = 10000
DEFAULT_ANGLE_TOL = 1e-12
DEFAULT_Q_MAX = 512
DEFAULT_BIT_BUDGET = 10**6


def graph_hash(g: Graph) -> str:
    """Stable short digest of the canonical graph file text."""
    return hashlib.sha256(write_graph_file(g).encode()).hexdigest()[:16]


def matching_sum(
    g: Graph,
    t: int,
    allowed_edges=None,
    forbidden_vertices=None,
) -> Fraction:
    """Sum over t-matchings of the product of reciprocal-degree weights.

    The empty matching contributes 1, so t=0 always returns 1.
    """
    total = Fraction(0)
    for matching in enumerate_matchings(g, t, allowed_edges, forbidden_vertices):
        prod = Fraction(1)
        for e in matching:
            prod *= edge_weight(g, e)
        total += prod
    return total


def integrality_filter(cp: CharPoly) -> tuple[int, ...]:
    """Indices j where 2^j times the coefficient of x^(n-j) is not integral.

    An empty result means the necessary condition for periodicity holds.
    """
    n = cp.degree
    failing = []
    for j in range(n + 1):
        if not is_integer(cp[n - j] * 2**j):
            failing.append(j)
    return tuple(failing)


@dataclass(frozen=True)
class DegreeConditionVerdict:
    kind: str  # "all_degree_two" | "one_degree_four" | "violates"
    vertex: int | None = None  # the degree-4 cycle vertex when applicable


def degree_condition_filter(
    d: UnicycleDecomposition, g: Graph
) -> DegreeConditionVerdict:
    """Classify cycle degrees: all 2, exactly one 4 (rest 2), or neither.

    Periodic odd-unicyclic graphs can only fall in the first two classes.
    """
    degs = [g.degree[v] for v in d.cycle]
    if all(x == 2 for x in degs):
        return DegreeConditionVerdict("all_degree_two")
    fours = [v for v, x in zip(d.cycle, degs) if x == 4]
    rest_two = sum(1 for x in degs if x == 2) == len(degs) - 1
    if len(fours) == 1 and rest_two:
        return DegreeConditionVerdict("one_degree_four", vertex=fours[0])
    return DegreeConditionVerdict("violates")


def detect_rational_angle(
    x: float, tol: float = DEFAULT_ANGLE_TOL, q_max: int = DEFAULT_Q_MAX
) -> tuple[int, int] | None:
    """Find p/q with q <= q_max and |x - p/q| <= tol, via continued fractions.

    x is a ratio of an angle to pi, so it lies in [0, 1]. Returns the
    reduced pair or None when no convergent is close enough.
    """
    if x < -tol or x > 1 + tol:
        return None
    # walk the continued-fraction convergents of x
    p_prev, q_prev = 1, 0
    p_cur, q_cur = int(math.floor(x)), 1
    frac = x - math.floor(x)
    for _ in range(64):
        if abs(x - p_cur / q_cur) <= tol:
            gcd = math.gcd(p_cur, q_cur)
            return p_cur // gcd, q_cur // gcd
        if frac == 0:
            break
        recip = 1.0 / frac
        a = int(math.floor(recip))
        frac = recip - a
        p_cur, p_prev = a * p_cur + p_prev, p_cur
        q_cur, q_prev = a * q_cur + q_prev, q_cur
        if q_cur > q_max:
            break
    return None


def _order_on_unit_circle(p: int, q: int) -> int:
    # multiplicative order of exp(i pi p/q): least k with k*p ≡ 0 mod 2q
    return 2 * q // math.gcd(p, 2 * q)


@dataclass(frozen=True)
class PeriodReport:
    """Outcome of period detection.

    verdict is one of "periodic", "refuted_by_integrality", or
    "no_period_up_to". period is set only for "periodic". failing_indices
    lists the integrality violations for the refuted case. candidate_source
    records whether the confirmed period came from the spectral guess or
    the exhaustive sweep.
    """

    verdict: str
    period: int | None
    failing_indices: tuple[int, ...]
    k_max: int
    candidate_source: str | None
    graph_hash: str


def _budget_check(m: RationalMatrix, bit_budget: int) -> None:
    bits = m.bit_size()
    if bits > bit_budget:
        raise BudgetExceededError(
            "matrix entries reached %d bits (budget %d)" % (bits, bit_budget),
            bits=bits,
        )


def _scan_minimal(
    u: RationalMatrix, k: int, bit_budget: int
) -> int:
    """Least d in 1..k with u^d = I, given that u^k = I is already known."""
    acc = u
    for d in range(1, k):
        if acc.is_identity():
            return d
        acc = mat_mul(acc, u)
        _budget_check(acc, bit_budget)
    return k


def find_period(
    g: Graph,
    k_max: int = DEFAULT_K_MAX,
    tol: float = DEFAULT_ANGLE_TOL,
    q_max: int = DEFAULT_Q_MAX,
    bit_budget: int = DEFAULT_BIT_BUDGET,
) -> PeriodReport:
    """Decide periodicity of the arc evolution operator.

    Stage 1 refutes via the integrality filter. Stage 2 maps the numeric
    vertex spectrum through arccos, detects rational angle multiples with
    continued fractions, and exactly verifies the implied least common
    multiple (doubled if needed for a leftover -1 eigenvalue). Stage 3
    multiplies exact powers one by one up to k_max. Minimality of every
    reported period is certified by a full exact scan below it.
    """
    if k_max < 1:
        raise InvalidParameterError("k_max must be >= 1, got %d" % k_max)
    digest = graph_hash(g)
    cp = charpoly_exact(build_transition_matrix(g).matrix)
    failing = integrality_filter(cp)
    if failing:
        return PeriodReport(
            verdict="refuted_by_integrality",
            period=None,
            failing_indices=failing,
            k_max=k_max,
            candidate_source=None,
            graph_hash=digest,
        )

    u = build_grover_operator(g).matrix

    candidate = _spectral_candidate(g, tol, q_max)
    if candidate is not None:
        for k in (candidate, 2 * candidate):
            power = mat_pow(u, k)
            _budget_check(power, bit_budget)
            if power.is_identity():
                period = _scan_minimal(u, k, bit_budget)
                return PeriodReport(
                    verdict="periodic",
                    period=period,
                    failing_indices=(),
                    k_max=k_max,
                    candidate_source="spectral",
                    graph_hash=digest,
                )

    acc = u
    for d in range(1, k_max + 1):
        if acc.is_identity():
            return PeriodReport(
                verdict="periodic",
                period=d,
                failing_indices=(),
                k_max=k_max,
                candidate_source="exhaustive",
                graph_hash=digest,
            )
        if d < k_max:
            acc = mat_mul(acc, u)
            _budget_check(acc, bit_budget)
    return PeriodReport(
        verdict="no_period_up_to",
        period=None,
        failing_indices=(),
        k_max=k_max,
        candidate_source=None,
        graph_hash=digest,
    )


def _spectral_candidate(g: Graph, tol: float, q_max: int) -> int | None:
    """lcm of the orders implied by the numeric vertex spectrum, or None."""
    # snap near +-1 before arccos: its derivative blows up at the ends, so
    # an eigenvalue off by 1e-16 there lands the angle 1e-8 off
    clamp = 1e-12
    candidate = 1
    for lam in transition_spectrum(g).values:
        if lam > 1 + clamp or lam < -1 - clamp:
            return None
        if lam >= 1 - clamp:
            continue
        if lam <= -1 + clamp:
            candidate = math.lcm(candidate, 2)
            continue
        ratio = math.acos(lam) / math.pi
        pq = detect_rational_angle(ratio, tol, q_max)
        if pq is None:
            return None
        candidate = math.lcm(candidate, _order_on_unit_circle(*pq))
    return candidate


def odd_period_query(g: Graph, k_max: int = DEFAULT_K_MAX) -> bool:
    """True iff the graph is periodic with an odd period (within k_max)."""
    report = find_period(g, k_max=k_max)
    return report.verdict == "periodic" and report.period % 2 == 1


# ---------------------------------------------------------------------------
# Matching-sum identities on odd-unicyclic graphs.


def cycle_matching_identity_check(
    g: Graph, d: UnicycleDecomposition, t: int
) -> bool:
    """Cross-check a charpoly coefficient against cycle-avoiding matchings.

    For an odd-unicyclic graph with girth k, the coefficient of x^(n-k-2t)
    must equal (-1)^(t+1) * 2 * prod(1/deg over cycle vertices) times the
    weighted sum of t-matchings that avoid the cycle entirely. Exact
    rational comparison on both sides.
    """
    if t < 0:
        raise InvalidParameterError("matching size must be >= 0, got %d" % t)
    n = g.n
    index = n - d.girth - 2 * t
    if index < 0:
        raise IndexOutOfRangeError(
            "coefficient index %d out of range for t=%d" % (index, t)
        )
    cp = charpoly_exact(build_transition_matrix(g).matrix)
    cycle_set = set(d.cycle)
    off_cycle = [
        e for e in g.edges if e[0] not in cycle_set and e[1] not in cycle_set
    ]
    cycle_weight = Fraction(1)
    for v in d.cycle:
        cycle_weight /= g.degree[v]
    rhs = (
        Fraction((-1) ** (t + 1))
        * 2
        * cycle_weight
        * matching_sum(g, t, off_cycle, d.cycle)
    )
    return cp[index] == rhs


@dataclass(frozen=True)
class BranchFrame:
    """The split of an odd-unicyclic graph at its degree-4 cycle vertex.

    hub is the cycle vertex of degree 4; its two off-cycle neighbours head
    the two branches. core_edges holds the cycle plus the two first branch
    edges; outer_edges is everything else. branch_a/branch_b list each
    lockstep chain of vertices walked from the hub while degrees stay 2,
    plus the first vertex that breaks the pattern.
    """

    hub: int
    core_edges: tuple[Edge, ...]
    outer_edges: tuple[Edge, ...]
    branch_a: tuple[int, ...]
    branch_b: tuple[int, ...]


def _chain_from(g: Graph, hub: int, first: int) -> tuple[int, ...]:
    # follow the unique path while interior degrees equal 2
    chain = [first]
    prev, cur = hub, first
    while g.degree[cur] == 2:
        nxt = next(x for x in g.adj[cur] if x != prev)
        chain.append(nxt)
        prev, cur = cur, nxt
    return tuple(chain)


def branch_frame(g: Graph) -> BranchFrame:
    """Build the degree-4 split, or raise ShapeMismatch if it does not exist."""
    cls = classify(g)
    if cls.kind != "odd_unicycle":
        raise ShapeMismatchError("graph is not odd-unicyclic")
    d = cls.decomposition
    verdict = degree_condition_filter(d, g)
    if verdict.kind != "one_degree_four":
        raise ShapeMismatchError(
            "cycle degrees are %s, need exactly one degree-4 vertex"
            % verdict.kind
        )
    hub = verdict.vertex
    cycle_set = set(d.cycle)
    heads = sorted(x for x in g.adj[hub] if x not in cycle_set)
    assert len(heads) == 2
    first_edges = [tuple(sorted((hub, h))) for h in heads]
    core = tuple(sorted(set(d.cycle_edges()) | set(first_edges)))
    core_set = set(core)
    outer = tuple(e for e in g.edges if e not in core_set)
    return BranchFrame(
        hub=hub,
        core_edges=core,
        outer_edges=outer,
        branch_a=_chain_from(g, hub, heads[0]),
        branch_b=_chain_from(g, hub, heads[1]),
    )


def lockstep_chain_length(frame: BranchFrame, g: Graph) -> int:
    """Largest t with the first t vertices of both branches of degree 2."""
    t = 0
    while (
        t < len(frame.branch_a)
        and t < len(frame.branch_b)
        and g.degree[frame.branch_a[t]] == 2
        and g.degree[frame.branch_b[t]] == 2
    ):
        t += 1
    return t


def _branch_edges(frame: BranchFrame, which: str) -> list[Edge]:
    chain = frame.branch_a if which == "a" else frame.branch_b
    verts = (frame.hub,) + chain
    return [
        tuple(sorted((verts[i], verts[i + 1]))) for i in range(len(chain))
    ]


def _outer_sum_excluding(
    g: Graph, frame: BranchFrame, i: int, which: str, upto: int
) -> Fraction:
    """i-matching sum over outer edges minus branch edges 2..upto."""
    drop = set(_branch_edges(frame, which)[1:upto])
    allowed = [e for e in frame.outer_edges if e not in drop]
    return matching_sum(g, i, allowed)


def _paired_sum(g: Graph, frame: BranchFrame, i: int, upto: int) -> Fraction:
    return _outer_sum_excluding(g, frame, i, "a", upto) + _outer_sum_excluding(
        g, frame, i, "b", upto
    )


def tail_recurrence_check(g: Graph, i: int, r: int) -> bool:
    """Verify the peel-one-edge recurrence for paired branch matching sums.

    With S(i, r) denoting the sum of the two i-matching totals over outer
    edges that exclude branch edges 2..r, the identity is

        S(i, r) = 2 * sum over outer i-matchings
                  - sum_{j=2..r} (1/4) * S(i-1, j+1).

    It holds when the first r vertices of both branches have degree 2,
    which makes every excluded edge weight exactly 1/4 and pins the edge
    after the last excluded one. Outside that shape the premise fails and
    ShapeMismatch is raised. i=0 reduces to 2 = 2.
    """
    if i < 0:
        raise InvalidParameterError("matching size must be >= 0, got %d" % i)
    if r < 1:
        raise InvalidParameterError("exclusion depth must be >= 1, got %d" % r)
    frame = branch_frame(g)
    if i == 0:
        return _paired_sum(g, frame, 0, r) == 2
    if r >= 2:
        for chain in (frame.branch_a, frame.branch_b):
            if len(chain) <= r or any(g.degree[chain[j]] != 2 for j in range(r)):
                raise ShapeMismatchError(
                    "branch lacks %d degree-2 chain vertices" % r
                )
    lhs = _paired_sum(g, frame, i, r)
    base = matching_sum(g, i, frame.outer_edges)
    rhs = 2 * base
    for j in range(2, r + 1):
        rhs -= Fraction(1, 4) * _paired_sum(g, frame, i - 1, j + 1)
    return lhs == rhs


def matching_split_check(g: Graph, t: int) -> bool:
    """Split all t-matchings at the core edge set and compare with charpoly.

    The weighted t-matching total over the whole graph equals the
    coefficient of x^(n-2t) up to sign (-1)^t; subtracting the directly
    enumerated matchings that touch the core must leave exactly the
    outer-edge total. Exact comparison.
    """
    if t < 0:
        raise InvalidParameterError("matching size must be >= 0, got %d" % t)
    frame = branch_frame(g)
    if 2 * t > g.n:
        raise IndexOutOfRangeError(
            "coefficient index %d out of range" % (g.n - 2 * t)
        )
    cp = charpoly_exact(build_transition_matrix(g).matrix)
    outer_total = matching_sum(g, t, frame.outer_edges)
    core = set(frame.core_edges)
    touching = Fraction(0)
    for matching in enumerate_matchings(g, t):
        if any(e in core for e in matching):
            prod = Fraction(1)
            for e in matching:
                prod *= edge_weight(g, e)
            touching += prod
    lhs_rho = Fraction((-1) ** t) * cp[g.n - 2 * t]
    return outer_total == lhs_rho - touching


@dataclass(frozen=True)
class IntegralityInstance:
    i: int
    scaled_outer: Fraction  # 4^i times the outer i-matching sum
    scaled_paired: Fraction  # 2^(2(i-1)-1) times S(i-1, 2)

    @property
    def holds(self) -> bool:
        return is_integer(self.scaled_outer) and is_integer(self.scaled_paired)


def branch_integrality_instances(g: Graph) -> tuple[IntegralityInstance, ...]:
    """Scaled matching sums that must be integers along the lockstep chains.

    For i = 1..t (t the lockstep degree-2 chain length), checks that
    4^i * (outer i-matching sum) and 2^(2(i-1)-1) * S(i-1, 2) are integers.
    """
    frame = branch_frame(g)
    t = lockstep_chain_length(frame, g)
    out = []
    for i in range(1, t + 1):
        k_scaled = Fraction(4) ** i * matching_sum(g, i, frame.outer_edges)
        l_scaled = Fraction(2) ** (2 * (i - 1) - 1) * _paired_sum(
            g, frame, i - 1, 2
        )
        out.append(IntegralityInstance(i, k_scaled, l_scaled))
    return tuple(out)


# ---------------------------------------------------------------------------
# Chebyshev eigenvector construction on the two-tailed family.


def chebyshev_table(max_index: int) -> tuple[tuple[int, ...], ...]:
    """Integer coefficients of the second-kind Chebyshev polynomials.

    Row j holds the coefficients of U_j, low to high. U_0 = 1, U_1 = 2x,
    U_{j+1} = 2x U_j - U_{j-1}.
    """
    if max_index < 0:
        raise InvalidParameterError("max_index must be >= 0")
    rows: list[tuple[int, ...]] = [(1,)]
    if max_index >= 1:
        rows.append((0, 2))
    for j in range(1, max_index):
        prev, cur = rows[j - 1], rows[j]
        nxt = [0] * (len(cur) + 1)
        for a, c in enumerate(cur):
            nxt[a + 1] += 2 * c
        for a, c in enumerate(prev):
            nxt[a] -= c
        rows.append(tuple(nxt))
    return tuple(rows)


def _chebyshev_value(j: int, x: float) -> float:
    # U_j(x) by the recurrence; j >= 0
    prev, cur = 1.0, 2.0 * x
    if j == 0:
        return prev
    for _ in range(j - 1):
        prev, cur = cur, 2.0 * x * cur - prev
    return cur


@dataclass(frozen=True)
class ChebyshevReport:
    eigenvalues: tuple[float, ...]
    max_residual: float
    tail_edges: int


def chebyshev_eigen_check(k: int, r: int, tol: float = 1e-10) -> ChebyshevReport:
    """Verify the closed-form tail eigenvectors on the two-tailed graph.

    The graph is the odd cycle C_k with two pendant paths of r-1 edges
    each sharing one cycle vertex. For each l = 1..r-1 the vector that
    vanishes on the cycle and carries Chebyshev values U_{j-1}(lambda_l)
    on one tail and their negatives on the other is an eigenvector for
    lambda_l = cos((2l-1) pi / (2(r-1))). Checks the residual of the
    eigen-equation and that each lambda_l shows up in the numeric
    spectrum. Raises ResidualExceeded naming the first offending l.
    """
    if r < 2:
        raise InvalidParameterError("need r >= 2, got %d" % r)
    m = r - 1
    g = two_tail_graph(k, m)
    n = g.n
    spec = transition_spectrum(g).values
    lambdas = []
    worst = 0.0
    for l in range(1, m + 1):
        lam = math.cos((2 * l - 1) * math.pi / (2 * m))
        lambdas.append(lam)
        f = [0.0] * n
        for j in range(1, m + 1):
            value = _chebyshev_value(j - 1, lam)
            f[k + j - 1] = value
            f[k + m + j - 1] = -value
        residual = 0.0
        for v in range(n):
            image = sum(f[x] for x in g.adj[v]) / g.degree[v]
            residual = max(residual, abs(image - lam * f[v]))
        if residual > tol:
            raise ResidualExceededError(
                "eigenvector residual %.3e exceeds %.3e at l=%d"
                % (residual, tol, l)
            )
        if min(abs(s - lam) for s in spec) > tol:
            raise ResidualExceededError(
                "eigenvalue %.15g missing from the spectrum at l=%d" % (lam, l)
            )
        worst = max(worst, residual)
    return ChebyshevReport(
        eigenvalues=tuple(lambdas), max_residual=worst, tail_edges=m
    )
