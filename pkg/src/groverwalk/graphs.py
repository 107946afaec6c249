"""Finite simple connected graphs and their combinatorial structure.

Vertices are 0..n-1. Edges are stored as sorted pairs (u, v) with u < v, and
the edge list itself is kept sorted, which fixes a canonical order for
everything downstream (arcs, matchings, file output).

An arc is an ordered traversal of an edge. Arcs are totally ordered by
(min endpoint, max endpoint, direction flag), so edge i contributes arcs
2*i (low to high) and 2*i + 1 (high to low).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple, Sequence

from .exceptions import (
    DisconnectedError,
    DuplicateEdgeError,
    EmptyGraphError,
    InvalidParameterError,
    LoopEdgeError,
    ParseError,
)

Edge = tuple[int, int]


class Arc(NamedTuple):
    origin: int
    terminus: int

    def reverse(self) -> "Arc":
        return Arc(self.terminus, self.origin)


class Graph:
    """Simple connected graph with a fixed canonical edge order."""

    __slots__ = ("n", "edges", "adj", "degree")

    def __init__(self, n: int, edges: Sequence[tuple[int, int]]):
        if n < 1:
            raise EmptyGraphError("graph needs at least one vertex, got n=%d" % n)
        seen: set[Edge] = set()
        norm: list[Edge] = []
        for pair in edges:
            u, v = pair
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameterError(
                    "edge (%r, %r) references a vertex outside 0..%d" % (u, v, n - 1)
                )
            if u == v:
                raise LoopEdgeError("loop at vertex %d" % u)
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise DuplicateEdgeError("edge %r listed twice" % (e,))
            seen.add(e)
            norm.append(e)
        norm.sort()
        self.n = n
        self.edges = tuple(norm)
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in norm:
            adj[u].add(v)
            adj[v].add(u)
        self.adj = tuple(frozenset(s) for s in adj)
        self.degree = tuple(len(s) for s in adj)
        self._check_connected()

    def _check_connected(self) -> None:
        seen = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for v in self.adj[u]:
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        if len(seen) != self.n:
            raise DisconnectedError(
                "graph is not connected (%d of %d vertices reachable from 0)"
                % (len(seen), self.n)
            )

    @property
    def m(self) -> int:
        return len(self.edges)

    def arcs(self) -> tuple[Arc, ...]:
        out: list[Arc] = []
        for u, v in self.edges:
            out.append(Arc(u, v))
            out.append(Arc(v, u))
        return tuple(out)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """New graph with vertex i renamed perm[i]."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return "Graph(n=%d, edges=%r)" % (self.n, list(self.edges))


def build_graph(n: int, edges: Sequence[tuple[int, int]]) -> Graph:
    """Validate and build a simple connected graph.

    Raises EmptyGraphError, LoopEdgeError, DuplicateEdgeError,
    DisconnectedError, or InvalidParameterError as appropriate. The single
    vertex graph (n=1, no edges) is accepted; it is the only graph allowed
    to carry a degree-zero vertex.
    """
    return Graph(n, edges)


@dataclass(frozen=True)
class UnicycleDecomposition:
    """The unique cycle of a unicyclic graph plus the off-cycle edges.

    The cycle starts at its smallest vertex id and proceeds toward that
    vertex's smaller-id cycle neighbour, which makes the tuple canonical.
    """

    cycle: tuple[int, ...]
    girth: int
    forest_edges: tuple[Edge, ...]

    def cycle_edges(self) -> tuple[Edge, ...]:
        k = len(self.cycle)
        out = []
        for i in range(k):
            u, v = self.cycle[i], self.cycle[(i + 1) % k]
            out.append((u, v) if u < v else (v, u))
        return tuple(sorted(out))


@dataclass(frozen=True)
class Classification:
    kind: str  # "tree" | "bipartite" | "odd_unicycle" | "other"
    decomposition: UnicycleDecomposition | None = None


def _two_colorable(g: Graph) -> bool:
    color = [-1] * g.n
    color[0] = 0
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if color[v] == -1:
                color[v] = 1 - color[u]
                queue.append(v)
            elif color[v] == color[u]:
                return False
    return True


def unicycle_decomposition(g: Graph) -> UnicycleDecomposition:
    """Peel degree-one vertices until only the cycle remains."""
    alive = set(range(g.n))
    deg = list(g.degree)
    queue = deque(v for v in alive if deg[v] == 1)
    while queue:
        u = queue.popleft()
        alive.discard(u)
        for v in g.adj[u]:
            if v in alive:
                deg[v] -= 1
                if deg[v] == 1:
                    queue.append(v)
    start = min(alive)
    nbrs = sorted(v for v in g.adj[start] if v in alive)
    cycle = [start, nbrs[0]]
    while True:
        prev, cur = cycle[-2], cycle[-1]
        nxt = next(v for v in g.adj[cur] if v in alive and v != prev)
        if nxt == start:
            break
        cycle.append(nxt)
    cyc = tuple(cycle)
    cycset = set()
    k = len(cyc)
    for i in range(k):
        u, v = cyc[i], cyc[(i + 1) % k]
        cycset.add((u, v) if u < v else (v, u))
    forest = tuple(e for e in g.edges if e not in cycset)
    return UnicycleDecomposition(cycle=cyc, girth=k, forest_edges=forest)


def classify(g: Graph) -> Classification:
    """Sort a graph into tree / bipartite / odd unicycle / other.

    odd_unicycle is returned exactly when the graph is non-bipartite with
    |E| = |V|: one independent cycle, and it must be odd.
    """
    if g.m == g.n - 1:
        return Classification("tree")
    if _two_colorable(g):
        return Classification("bipartite")
    if g.m == g.n:
        dec = unicycle_decomposition(g)
        assert dec.girth % 2 == 1
        return Classification("odd_unicycle", dec)
    return Classification("other")


def enumerate_matchings(
    g: Graph,
    t: int,
    allowed_edges: Sequence[Edge] | None = None,
    forbidden_vertices: Sequence[int] | None = None,
) -> Iterator[tuple[Edge, ...]]:
    """Yield every t-matching once, in canonical edge order.

    A t-matching is a set of t pairwise vertex-disjoint edges drawn from
    allowed_edges (default: all edges) and avoiding forbidden_vertices
    entirely. t=0 yields the single empty matching.
    """
    if t < 0:
        raise InvalidParameterError("matching size must be >= 0, got %d" % t)
    banned = frozenset(forbidden_vertices or ())
    if allowed_edges is None:
        pool = [e for e in g.edges if not (e[0] in banned or e[1] in banned)]
    else:
        allowed = {(u, v) if u < v else (v, u) for u, v in allowed_edges}
        pool = [
            e
            for e in g.edges
            if e in allowed and not (e[0] in banned or e[1] in banned)
        ]

    chosen: list[Edge] = []
    used: set[int] = set()

    def rec(start: int) -> Iterator[tuple[Edge, ...]]:
        if len(chosen) == t:
            yield tuple(chosen)
            return
        # not enough edges left to finish
        if len(pool) - start < t - len(chosen):
            return
        for i in range(start, len(pool)):
            u, v = pool[i]
            if u in used or v in used:
                continue
            chosen.append(pool[i])
            used.update((u, v))
            yield from rec(i + 1)
            chosen.pop()
            used.difference_update((u, v))

    yield from rec(0)


def read_graph_file(text: str) -> Graph:
    """Parse the plain edge-list format.

    First non-comment line is "n m"; the next m non-comment lines are
    "u v" pairs. '#' starts a comment, blank lines are skipped, tokens are
    whitespace separated. Malformed input raises ParseError with the line
    number; graph validation errors propagate from build_graph.
    """
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError("expected two integers, got %r" % raw.strip(), lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("non-integer token in %r" % raw.strip(), lineno) from None
        if header is None:
            header = (a, b)
        else:
            if len(edges) >= header[1]:
                raise ParseError("more edges than the declared m=%d" % header[1], lineno)
            edges.append((a, b))
    if header is None:
        raise ParseError("no header line found", None)
    n, m = header
    if len(edges) != m:
        raise ParseError("declared m=%d but found %d edges" % (m, len(edges)), None)
    return build_graph(n, edges)


def write_graph_file(g: Graph) -> str:
    """Render a graph in the edge-list format, edges in canonical order."""
    lines = ["%d %d" % (g.n, g.m)]
    lines.extend("%d %d" % e for e in g.edges)
    return "\n".join(lines) + "\n"


def edge_weight(g: Graph, e: tuple[int, int]) -> Fraction:
    """Reciprocal degree product of the endpoints, as an exact fraction."""
    u, v = e
    if not g.has_edge(u, v):
        raise InvalidParameterError("(%d, %d) is not an edge" % (u, v))
    return Fraction(1, g.degree[u]) * Fraction(1, g.degree[v])
