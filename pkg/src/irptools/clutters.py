"""Clutters, graphs, incidence matrices, and graph predicates.

A clutter is a finite set family with no containment between members and no
isolated vertices; a simple graph is the special case of 2-element edges.
Vertices carry string labels but all computations run on 0-based indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .errors import BudgetExceededError, InputError
from .linalg import IntVector, RatMatrix


def _default_labels(n: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(n))


@dataclass(frozen=True)
class Clutter:
    """Set family over vertices 0..n-1 with the clutter axiom enforced."""

    n: int
    edges: tuple[frozenset[int], ...]
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        if self.n <= 0:
            raise InputError("bad-shape", "clutter needs at least one vertex")
        labels = self.labels or _default_labels(self.n)
        object.__setattr__(self, "labels", tuple(labels))
        if len(self.labels) != self.n or len(set(self.labels)) != self.n:
            raise InputError("bad-labels", "labels must be unique, one per vertex")
        if not self.edges:
            raise InputError("no-edges", "clutter needs at least one edge")
        seen = set()
        for e in self.edges:
            if not e:
                raise InputError("empty-edge", "edges must be non-empty")
            if any(v < 0 or v >= self.n for v in e):
                raise InputError("bad-edge", f"edge {sorted(e)} references unknown vertex")
            if e in seen:
                raise InputError("duplicate-edge", f"edge {sorted(e)} repeated")
            seen.add(e)
        for a, b in combinations(self.edges, 2):
            if a <= b or b <= a:
                raise InputError(
                    "clutter-axiom",
                    f"edge {sorted(a)} and edge {sorted(b)} are nested",
                )
        covered = set().union(*self.edges)
        if covered != set(range(self.n)):
            missing = sorted(set(range(self.n)) - covered)
            raise InputError(
                "isolated-vertex", f"vertices {missing} occur in no edge"
            )

    @classmethod
    def from_edge_lists(cls, n: int, edges, labels=()) -> "Clutter":
        return cls(n, tuple(frozenset(e) for e in edges), tuple(labels))

    @property
    def q(self) -> int:
        return len(self.edges)

    def edge_vector(self, k: int) -> IntVector:
        e = self.edges[k]
        return tuple(1 if i in e else 0 for i in range(self.n))

    def columns(self) -> list[IntVector]:
        return [self.edge_vector(k) for k in range(self.q)]

    def is_uniform(self) -> bool:
        sizes = {len(e) for e in self.edges}
        return len(sizes) == 1


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    n: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        if self.n <= 0:
            raise InputError("bad-shape", "graph needs at least one vertex")
        labels = self.labels or _default_labels(self.n)
        object.__setattr__(self, "labels", tuple(labels))
        if len(self.labels) != self.n or len(set(self.labels)) != self.n:
            raise InputError("bad-labels", "labels must be unique, one per vertex")
        norm = []
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise InputError("loop-edge", f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InputError("bad-edge", f"edge ({u},{v}) references unknown vertex")
            e = (min(u, v), max(u, v))
            if e in seen:
                raise InputError("duplicate-edge", f"edge {e} repeated")
            seen.add(e)
            norm.append(e)
        object.__setattr__(self, "edges", tuple(norm))

    @classmethod
    def from_edges(cls, n: int, edges, labels=()) -> "Graph":
        return cls(n, tuple(tuple(e) for e in edges), tuple(labels))

    @property
    def q(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[set[int]]:
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def complement(self) -> "Graph":
        edges = [
            (u, v)
            for u, v in combinations(range(self.n), 2)
            if (u, v) not in set(self.edges)
        ]
        return Graph(self.n, tuple(edges), self.labels)

    def edge_clutter(self) -> Clutter:
        """The clutter whose edges are this graph's edges."""
        if not self.edges:
            raise InputError("no-edges", "graph has no edges")
        return Clutter(self.n, tuple(frozenset(e) for e in self.edges), self.labels)

    def clique_clutter(self) -> Clutter:
        """The clutter of maximal cliques (always satisfies the axiom)."""
        cliques = maximal_cliques(self)
        return Clutter(self.n, tuple(frozenset(c) for c in cliques), self.labels)


def incidence_matrix(c: Clutter) -> RatMatrix:
    """n x q matrix whose column k is the characteristic vector of edge k."""
    rows = []
    for i in range(c.n):
        rows.append([Fraction(1 if i in c.edges[k] else 0) for k in range(c.q)])
    return RatMatrix.from_rows(rows)


def closure_generators(c: Clutter) -> list[IntVector]:
    """All integer vectors dominated by some edge's characteristic vector.

    Contains the zero vector, every unit vector, and every column, sorted
    lexicographically.
    """
    out = set()
    for e in c.edges:
        support = sorted(e)
        for size in range(len(support) + 1):
            for sub in combinations(support, size):
                out.add(tuple(1 if i in sub else 0 for i in range(c.n)))
    return sorted(out)


def _connected_on(adj: list[set[int]], subset: set[int]) -> bool:
    if not subset:
        return True
    start = next(iter(subset))
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w in subset and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == subset


def is_connected(g: Graph) -> bool:
    return _connected_on(g.adjacency(), set(range(g.n)))


def is_bipartite(g: Graph) -> bool:
    adj = g.adjacency()
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def odd_cycles(g: Graph, max_len: int | None = None, budget: int | None = None) -> list[tuple[int, ...]]:
    """All odd cycles of length <= max_len, one per rotation/reflection class.

    Cycles are reported as vertex sequences starting at their smallest
    vertex with the smaller neighbour second; the list is sorted.
    """
    limit = g.n if max_len is None else max_len
    if limit > g.n:
        raise InputError("bad-parameter", "max_len exceeds the vertex count")
    adj = g.adjacency()
    cycles: list[tuple[int, ...]] = []

    def extend(start: int, path: list[int], on_path: set[int]):
        u = path[-1]
        for w in sorted(adj[u]):
            if w == start and len(path) >= 3:
                if len(path) % 2 == 1 and path[1] < path[-1]:
                    cycles.append(tuple(path))
                    if budget is not None and len(cycles) > budget:
                        raise BudgetExceededError(
                            f"more than {budget} odd cycles"
                        )
                continue
            if w <= start or w in on_path or len(path) == limit:
                continue
            path.append(w)
            on_path.add(w)
            extend(start, path, on_path)
            on_path.remove(w)
            path.pop()

    for s in range(g.n):
        extend(s, [s], {s})
    return sorted(cycles)


@dataclass(frozen=True)
class OddCycleConditionReport:
    """Outcome of the disjoint odd cycle condition.

    For a violating pair the induced-subgraph connectivity test and the
    weaker joined-by-an-edge test coincide on vertex-disjoint cycles; both
    are recorded.
    """

    holds: bool
    witness: tuple[tuple[int, ...], tuple[int, ...]] | None = None
    witness_induced_connected: bool | None = None
    witness_joined_by_edge: bool | None = None


def disjoint_odd_cycle_condition(g: Graph, budget: int | None = None) -> OddCycleConditionReport:
    """Check that every two vertex-disjoint odd cycles induce a connected
    subgraph on the union of their vertex sets."""
    if not is_connected(g):
        raise InputError("not-connected", "the condition is defined for connected graphs")
    cycles = odd_cycles(g, g.n, budget=budget)
    adj = g.adjacency()
    masks = [frozenset(c) for c in cycles]
    for i, j in combinations(range(len(cycles)), 2):
        if masks[i] & masks[j]:
            continue
        union = set(masks[i]) | set(masks[j])
        induced_connected = _connected_on(adj, union)
        joined = any(w in masks[j] for u in masks[i] for w in adj[u])
        if not induced_connected:
            return OddCycleConditionReport(
                False, (cycles[i], cycles[j]), induced_connected, joined
            )
    return OddCycleConditionReport(True)


def maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    """All inclusion-maximal cliques (Bron-Kerbosch with pivoting)."""
    adj = g.adjacency()
    out: list[tuple[int, ...]] = []

    def bk(clique: list[int], cand: set[int], excl: set[int]):
        if not cand and not excl:
            out.append(tuple(sorted(clique)))
            return
        pivot_pool = cand | excl
        pivot = max(sorted(pivot_pool), key=lambda v: len(adj[v] & cand))
        for v in sorted(cand - adj[pivot]):
            bk(clique + [v], cand & adj[v], excl & adj[v])
            cand.remove(v)
            excl.add(v)

    bk([], set(range(g.n)), set())
    return sorted(out)


def maximal_independent_sets(g: Graph) -> list[tuple[int, ...]]:
    """All inclusion-maximal independent sets, via cliques of the complement."""
    return maximal_cliques(g.complement())


@dataclass(frozen=True)
class GraphPredicates:
    connected: bool
    bipartite: bool
    unmixed: bool


def graph_predicates(g: Graph) -> GraphPredicates:
    sizes = {len(s) for s in maximal_independent_sets(g)}
    return GraphPredicates(
        connected=is_connected(g),
        bipartite=is_bipartite(g),
        unmixed=len(sizes) == 1,
    )


def _has_odd_hole(adj: list[set[int]], n: int) -> bool:
    """Detect an induced odd cycle of length >= 5."""

    def extend(start: int, path: list[int], on_path: set[int]) -> bool:
        u = path[-1]
        for w in sorted(adj[u]):
            if w <= start or w in on_path:
                continue
            # chordless: w may only touch the path at its endpoint
            if any(x in adj[w] for x in path[1:-1]):
                continue
            if len(path) >= 2 and start in adj[w]:
                # adjacency to start either closes the cycle here or would
                # be a chord in any longer cycle through w
                cyc_len = len(path) + 1
                if cyc_len >= 5 and cyc_len % 2 == 1:
                    return True
                continue
            if len(path) + 1 < n:
                path.append(w)
                on_path.add(w)
                if extend(start, path, on_path):
                    return True
                on_path.remove(w)
                path.pop()
        return False

    for s in range(n):
        if extend(s, [s], {s}):
            return True
    return False


def is_perfect(g: Graph) -> bool:
    """Perfection via the odd-hole characterization: no induced odd cycle of
    length at least five in the graph or in its complement.  Intended for
    desk scale (roughly n <= 12)."""
    if _has_odd_hole(g.adjacency(), g.n):
        return False
    comp = g.complement()
    return not _has_odd_hole(comp.adjacency(), comp.n)
