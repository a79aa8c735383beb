"""Simple undirected graphs, bipartitions and cut predicates.

Vertices are dense integer ids ``0..n-1``.  Graphs are immutable after
construction and safe to share; every operation in this module is pure.
Adjacency is kept both as neighbor sets and as integer bitmasks, the
latter because the cut-enumeration loops elsewhere live on popcounts.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass


class InvalidBipartition(ValueError):
    """The two sides do not partition the graph's vertex set."""


class DisconnectedGraph(ValueError):
    """Raised by operations that require a connected input."""


class UnknownEdge(ValueError):
    """An edge set refers to an edge not present in the graph."""


class Graph:
    """Immutable simple undirected graph.

    Self-loops and parallel edges are rejected outright: the algorithms
    here assume simple graphs and silently repairing input would hide
    data problems.
    """

    __slots__ = ("n", "edges", "adj", "adj_mask", "_edge_set", "_hash")

    def __init__(self, n: int, edges):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        seen = set()
        adj = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"parallel edge ({u},{v})")
            seen.add(key)
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.edges = tuple(sorted(seen))
        self.adj = tuple(frozenset(s) for s in adj)
        self.adj_mask = tuple(sum(1 << w for w in s) for s in adj)
        self._edge_set = seen
        self._hash = hash((n, self.edges))

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edge_set

    def __eq__(self, other):
        if isinstance(other, Graph):
            return self.n == other.n and self.edges == other.edges
        return NotImplemented

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Bipartition:
    """A two-sided vertex partition; a cut when both sides are non-empty."""

    side_a: frozenset
    side_b: frozenset

    @classmethod
    def of(cls, graph: Graph, side_a) -> "Bipartition":
        a = frozenset(side_a)
        return cls(a, frozenset(graph.vertices) - a)

    @property
    def is_cut(self) -> bool:
        return bool(self.side_a) and bool(self.side_b)

    def flipped(self) -> "Bipartition":
        return Bipartition(self.side_b, self.side_a)


def _check_bipartition(graph: Graph, part: Bipartition) -> None:
    if part.side_a & part.side_b:
        raise InvalidBipartition("sides overlap")
    if part.side_a | part.side_b != frozenset(graph.vertices):
        raise InvalidBipartition("sides do not cover the vertex set")


class SubgraphView:
    """A vertex subset of a parent graph together with a retained edge subset.

    Retained edges must have both endpoints inside the vertex subset; they
    need not be all induced edges (local graphs of a decomposition drop the
    edges internal to the adhesion).
    """

    __slots__ = ("parent", "vertices", "edges", "_edge_set")

    def __init__(self, parent: Graph, vertices, edges):
        vs = frozenset(vertices)
        es = []
        for u, v in edges:
            key = (u, v) if u < v else (v, u)
            if not (key[0] in vs and key[1] in vs):
                raise ValueError(f"retained edge {key} leaves the vertex subset")
            if not parent.has_edge(*key):
                raise UnknownEdge(f"edge {key} not in parent graph")
            es.append(key)
        self.parent = parent
        self.vertices = vs
        self.edges = tuple(sorted(set(es)))
        self._edge_set = frozenset(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edge_set

    @property
    def m(self) -> int:
        return len(self.edges)

    def cross_edges(self, side_a) -> list:
        """Retained edges with exactly one endpoint in ``side_a``."""
        a = frozenset(side_a)
        return [e for e in self.edges if (e[0] in a) != (e[1] in a)]

    def __eq__(self, other):
        if isinstance(other, SubgraphView):
            return (self.parent == other.parent
                    and self.vertices == other.vertices
                    and self.edges == other.edges)
        return NotImplemented

    def __hash__(self):
        return hash((self.parent, self.vertices, self.edges))


def connected_components(graph: Graph) -> list:
    """Maximal connected vertex sets, sorted by smallest member."""
    seen = set()
    comps = []
    for start in graph.vertices:
        if start in seen:
            continue
        queue = deque([start])
        seen.add(start)
        comp = {start}
        while queue:
            u = queue.popleft()
            for w in graph.adj[u]:
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    queue.append(w)
        comps.append(frozenset(comp))
    comps.sort(key=min)
    return comps


def is_connected(graph: Graph) -> bool:
    return graph.n <= 1 or len(connected_components(graph)) == 1


def edge_cut(graph: Graph, part: Bipartition) -> list:
    """Edges with one endpoint on each side, in sorted order."""
    _check_bipartition(graph, part)
    a = part.side_a
    return [e for e in graph.edges if (e[0] in a) != (e[1] in a)]


def is_d_matching(graph: Graph, edges, d: int) -> bool:
    """True iff every vertex is incident to at most ``d`` of the given edges."""
    count = {}
    for u, v in edges:
        key = (u, v) if u < v else (v, u)
        if key not in graph._edge_set:
            raise UnknownEdge(f"edge {key} not in graph")
        count[u] = count.get(u, 0) + 1
        count[v] = count.get(v, 0) + 1
    return all(c <= d for c in count.values())


def is_d_cut(graph: Graph, part: Bipartition, d: int) -> bool:
    """True iff both sides are non-empty and every vertex has at most ``d``
    neighbors across the partition."""
    if d < 1:
        raise ValueError("d must be at least 1")
    _check_bipartition(graph, part)
    if not part.is_cut:
        return False
    a = part.side_a
    for v in graph.vertices:
        across = v in a
        limit = d
        for w in graph.adj[v]:
            if (w in a) != across:
                limit -= 1
                if limit < 0:
                    return False
    return True


def _max_flow(graph: Graph, source: int, sink: int):
    """Unit-capacity max flow (Edmonds-Karp); returns (value, residual)."""
    n = graph.n
    cap = [dict() for _ in range(n)]
    for u, v in graph.edges:
        cap[u][v] = 1
        cap[v][u] = 1
    flow = 0
    while True:
        parent = [-1] * n
        parent[source] = source
        queue = deque([source])
        while queue:
            u = queue.popleft()
            if u == sink:
                break
            for w, c in cap[u].items():
                if c > 0 and parent[w] == -1:
                    parent[w] = u
                    queue.append(w)
        if parent[sink] == -1:
            return flow, cap
        v = sink
        while v != source:
            u = parent[v]
            cap[u][v] -= 1
            cap[v][u] = cap[v].get(u, 0) + 1
            v = u
        flow += 1


def global_min_cut(graph: Graph):
    """Smallest edge cut over all non-trivial bipartitions.

    Runs a unit-capacity max flow from vertex 0 to every other vertex;
    simple and provably correct, which is all the desk scale needs.
    Returns ``(size, bipartition)``; size is ``None`` for graphs with
    fewer than two vertices (no non-trivial bipartition exists).
    """
    if not is_connected(graph):
        raise DisconnectedGraph("global min cut requires a connected graph")
    if graph.n < 2:
        return None, None
    best = None
    best_sink = None
    for sink in range(1, graph.n):
        value, _ = _max_flow(graph, 0, sink)
        if best is None or value < best:
            best = value
            best_sink = sink
    _, residual = _max_flow(graph, 0, best_sink)
    reach = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w, c in residual[u].items():
            if c > 0 and w not in reach:
                reach.add(w)
                queue.append(w)
    return best, Bipartition.of(graph, reach)


def global_min_cut_at_most(graph: Graph, k: int) -> bool:
    """True iff some non-trivial bipartition has at most ``k`` crossing edges."""
    size, _ = global_min_cut(graph)
    return size is not None and size <= k
