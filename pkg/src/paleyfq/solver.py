"""Exact maximum independent set via branch and bound.

Independence in a directed graph means independence in the symmetrized
graph, so the input is symmetrized and the search runs as a maximum
clique search on the complement, using bit-parallel candidate sets and a
greedy coloring upper bound.  A multistart greedy supplies the incumbent,
and for vertex-transitive inputs the search is rooted at vertex 0, which
is exact because automorphisms carry any maximum set through any chosen
vertex.  Everything is deterministic: natural index order, lowest-bit
tie-breaking, no randomness, single-threaded.  A time budget turns
exhaustion into a SolverTimeout that carries the incumbent certificate.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass

from .errors import SolverTimeout, VertexOutOfRange
from .graphs import GenericGraph, ProductGraph, as_generic, graph_fingerprint

DEFAULT_BUDGET_S = 300.0


@dataclass(frozen=True)
class IndepSet:
    """Certificate: pairwise non-adjacent vertices, bound to a graph hash."""

    vertices: tuple
    size: int
    graph_fingerprint: str

    def to_json(self) -> dict:
        verts = [list(v) if isinstance(v, tuple) else v for v in self.vertices]
        return {
            "vertices": verts,
            "size": self.size,
            "graph_fingerprint": self.graph_fingerprint,
        }


def _symmetrize(g: GenericGraph) -> list[int]:
    if g.symmetric:
        return list(g.rows)
    rows = list(g.rows)
    for i in range(g.n):
        r = g.rows[i]
        while r:
            j = (r & -r).bit_length() - 1
            rows[j] |= 1 << i
            r &= r - 1
    return rows


class _CliqueSearch:
    """Tomita-style max clique with greedy coloring bound on bitmasks."""

    __slots__ = ("adj", "n", "best", "best_size", "deadline", "nodes")

    def __init__(self, adj: list[int], n: int, deadline: float | None):
        self.adj = adj
        self.n = n
        self.best: list[int] = []
        self.best_size = 0
        self.deadline = deadline
        self.nodes = 0

    def seed(self, clique: list[int]) -> None:
        self.best = list(clique)
        self.best_size = len(clique)

    def _color_sort(self, P: int):
        adj = self.adj
        order: list[int] = []
        bounds: list[int] = []
        color = 0
        rest = P
        while rest:
            color += 1
            Q = rest
            while Q:
                v = (Q & -Q).bit_length() - 1
                bit = 1 << v
                Q &= ~adj[v] & ~bit
                rest ^= bit
                order.append(v)
                bounds.append(color)
        return order, bounds

    def expand(self, R: list[int], P: int) -> None:
        self.nodes += 1
        if self.deadline is not None and self.nodes % 2048 == 0:
            if time.monotonic() > self.deadline:
                raise _Expired()
        adj = self.adj
        order, bounds = self._color_sort(P)
        for i in range(len(order) - 1, -1, -1):
            if len(R) + bounds[i] <= self.best_size:
                return
            v = order[i]
            R.append(v)
            P2 = P & adj[v]
            if P2:
                self.expand(R, P2)
            elif len(R) > self.best_size:
                self.best = R.copy()
                self.best_size = len(R)
            R.pop()
            P &= ~(1 << v)


class _Expired(Exception):
    pass


def _multistart_greedy(n: int, closed: list[int]) -> list[int]:
    """Deterministic incumbent: index-order greedy from staggered offsets."""
    best: list[int] = []
    for start in range(min(n, 300)):
        used = 0
        chosen: list[int] = []
        for off in range(n):
            v = start + off
            if v >= n:
                v -= n
            if not (used >> v) & 1:
                chosen.append(v)
                used |= closed[v]
        if len(chosen) > len(best):
            best = chosen
    return best


def _max_clique(
    adj: list[int],
    n: int,
    deadline: float | None,
    seed: list[int],
    fix_root: bool,
) -> tuple[list[int], bool]:
    """Returns (vertices of a maximum clique, completed flag).

    fix_root restricts the search to cliques through vertex 0, which is
    exact when the graph is vertex-transitive: any maximum clique maps to
    one through a chosen vertex under an automorphism.
    """
    if n == 0:
        return [], True
    search = _CliqueSearch(adj, n, deadline)
    search.seed(seed)
    completed = True
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * n + 100))
    try:
        if fix_root:
            search.expand([0], adj[0])
        else:
            search.expand([], (1 << n) - 1)
    except _Expired:
        completed = False
    return sorted(search.best), completed


def _is_vertex_transitive_input(G) -> bool:
    # translations x -> x + c make every Cayley graph (and products of
    # Cayley graphs) vertex-transitive; symmetrization preserves this
    from .graphs import CayleyGraph

    if isinstance(G, CayleyGraph):
        return True
    if isinstance(G, ProductGraph):
        return all(isinstance(f, CayleyGraph) for f in G.factors)
    return False


def max_independent_set(
    G,
    budget_s: float = DEFAULT_BUDGET_S,
    vertex_transitive: bool | None = None,
) -> IndepSet:
    """Exact maximum independent set with certificate.

    Raises SolverTimeout carrying the best set found if the budget runs
    out.  The certificate is deterministic for a given graph.  When the
    graph is known vertex-transitive the search is rooted at vertex 0,
    which is a large speedup on Cayley powers; pass vertex_transitive
    explicitly to override the type-based detection.
    """
    g = as_generic(G)
    if vertex_transitive is None:
        vertex_transitive = _is_vertex_transitive_input(G)
    fingerprint = graph_fingerprint(g)
    sym = _symmetrize(g)
    full = (1 << g.n) - 1
    comp = [(full & ~sym[i]) & ~(1 << i) for i in range(g.n)]
    closed = [sym[i] | (1 << i) for i in range(g.n)]
    seed = _multistart_greedy(g.n, closed)
    deadline = time.monotonic() + budget_s if budget_s else None
    verts, completed = _max_clique(comp, g.n, deadline, seed, vertex_transitive)
    result = _make_indep_set(G, verts, fingerprint)
    if not completed:
        raise SolverTimeout(incumbent=result, budget_s=budget_s)
    return result


def _make_indep_set(G, verts: list[int], fingerprint: str) -> IndepSet:
    if isinstance(G, ProductGraph):
        labeled = tuple(G.vertex_tuple(v) for v in verts)
    else:
        labeled = tuple(verts)
    return IndepSet(vertices=labeled, size=len(verts), graph_fingerprint=fingerprint)


def verify_independent(G, vertices) -> bool:
    """True iff no ordered pair of distinct members is an edge."""
    g = as_generic(G)
    idx = []
    for v in vertices:
        if isinstance(v, (tuple, list)):
            if not isinstance(G, ProductGraph):
                raise VertexOutOfRange("tuple vertex for a non-product graph")
            i = G.vertex_index(tuple(v))
        else:
            i = v
        if not 0 <= i < g.n:
            raise VertexOutOfRange(f"vertex {v!r} out of range")
        idx.append(i)
    for a in idx:
        row = g.rows[a]
        for b in idx:
            if a != b and row >> b & 1:
                return False
    return True
