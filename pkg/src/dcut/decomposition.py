"""Rooted compact tree decompositions with small adhesions and bags that
no small edge cut can split unevenly.

The constructor here is a desk-scale substitute for the polynomial
machinery the solver's correctness argument treats as a black box: it
recursively tests the current vertex set for (k,k)-edge-unbreakability by
exhaustive cut enumeration, splits along a minimum-order witness cut when
one exists, and keeps children compact by recursing on connected
components with their exact neighborhoods as adhesions.  Whatever it
returns must pass :func:`verify` in full; the solver relies on nothing
else about the construction.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .graph import DisconnectedGraph, Graph, SubgraphView, is_connected


class SizeLimitExceeded(RuntimeError):
    """An exhaustive check was requested beyond its size threshold."""


class DecompositionError(RuntimeError):
    """Construction failed or produced output that fails verification."""


class AxiomViolation(ValueError):
    """The tree-decomposition axioms do not hold; carries a counterexample."""

    def __init__(self, kind, payload):
        super().__init__(f"{kind}: {payload}")
        self.kind = kind
        self.payload = payload


class TdParseError(ValueError):
    """Malformed decomposition file; carries the offending line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class RootedDecomposition:
    """Tree of bags; ``parent[i]`` is ``None`` exactly at the root."""

    n_vertices: int
    bags: tuple
    parent: tuple

    def __post_init__(self):
        if len(self.bags) != len(self.parent) or not self.bags:
            raise ValueError("bags and parent links must align and be non-empty")
        if len(self.bags) > self.n_vertices + 1:
            raise ValueError("node count exceeds vertex count + 1")
        roots = [i for i, p in enumerate(self.parent) if p is None]
        if len(roots) != 1:
            raise ValueError(f"expected exactly one root, found {len(roots)}")
        for i, p in enumerate(self.parent):
            if p is not None and not (0 <= p < len(self.bags)):
                raise ValueError(f"parent of node {i} out of range")
        for i in range(len(self.bags)):
            seen = {i}
            j = self.parent[i]
            while j is not None:
                if j in seen:
                    raise ValueError("parent links contain a cycle")
                seen.add(j)
                j = self.parent[j]
        for i, bag in enumerate(self.bags):
            for v in bag:
                if not (0 <= v < self.n_vertices):
                    raise ValueError(f"bag {i} references unknown vertex {v}")

    @property
    def root(self) -> int:
        return self.parent.index(None)

    @property
    def node_count(self) -> int:
        return len(self.bags)

    def children(self) -> tuple:
        kids = [[] for _ in self.bags]
        for i, p in enumerate(self.parent):
            if p is not None:
                kids[p].append(i)
        return tuple(tuple(sorted(c)) for c in kids)

    def postorder(self) -> list:
        kids = self.children()
        order = []
        stack = [(self.root, False)]
        while stack:
            node, done = stack.pop()
            if done:
                order.append(node)
            else:
                stack.append((node, True))
                for c in reversed(kids[node]):
                    stack.append((c, False))
        return order


@dataclass(frozen=True)
class NodeContext:
    """Per-node derived quantities: adhesion (bag shared with the parent),
    cone (union of descendant bags), interior (cone minus adhesion) and the
    local graph (induced on the cone, minus edges internal to the adhesion)."""

    node: int
    bag: frozenset
    adhesion: frozenset
    cone: frozenset
    interior: frozenset
    local_graph: SubgraphView
    bag_edges: tuple


def _axiom_violation(graph: Graph, td: RootedDecomposition):
    """None if the tree-decomposition axioms hold, else a counterexample."""
    if td.n_vertices != graph.n:
        return ("vertex-count-mismatch", (td.n_vertices, graph.n))
    for e in graph.edges:
        if not any(e[0] in bag and e[1] in bag for bag in td.bags):
            return ("uncovered-edge", e)
    occurrence = [set() for _ in range(graph.n)]
    for i, bag in enumerate(td.bags):
        for v in bag:
            occurrence[v].add(i)
    kids = td.children()
    for v in graph.vertices:
        nodes = occurrence[v]
        if not nodes:
            return ("missing-vertex", v)
        start = next(iter(nodes))
        seen = {start}
        queue = deque([start])
        while queue:
            t = queue.popleft()
            for nb in list(kids[t]) + ([td.parent[t]] if td.parent[t] is not None else []):
                if nb in nodes and nb not in seen:
                    seen.add(nb)
                    queue.append(nb)
        if seen != nodes:
            return ("disconnected-occurrence", v)
    return None


def derive_contexts(graph: Graph, td: RootedDecomposition) -> list:
    """One context per node, computed exactly from the definitions."""
    detail = _axiom_violation(graph, td)
    if detail is not None:
        raise AxiomViolation(*detail)
    cones = [None] * td.node_count
    kids = td.children()
    for t in td.postorder():
        cone = set(td.bags[t])
        for c in kids[t]:
            cone |= cones[c]
        cones[t] = frozenset(cone)
    contexts = []
    for t in range(td.node_count):
        p = td.parent[t]
        adhesion = frozenset() if p is None else td.bags[t] & td.bags[p]
        cone = cones[t]
        local_edges = [e for e in graph.edges
                       if e[0] in cone and e[1] in cone
                       and not (e[0] in adhesion and e[1] in adhesion)]
        view = SubgraphView(graph, cone, local_edges)
        bag = td.bags[t]
        bag_edges = tuple(e for e in view.edges if e[0] in bag and e[1] in bag)
        contexts.append(NodeContext(
            node=t, bag=bag, adhesion=adhesion, cone=cone,
            interior=cone - adhesion, local_graph=view, bag_edges=bag_edges))
    return contexts


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # pass | fail | skipped
    detail: object = None


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple

    @property
    def passed(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if c.status == "fail"]

    def __getitem__(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def _iter_cuts(local_adj):
    """Gray-code iteration over the subsets of local indices 0..m-2,
    yielding (side mask, number of crossing edges).  The last index stays
    on the fixed side, so each unordered bipartition appears exactly once.
    """
    m = len(local_adj)
    if m <= 1:
        return
    degs = [a.bit_count() for a in local_adj]
    mask = 0
    cut = 0
    for i in range(1, 1 << (m - 1)):
        j = (i & -i).bit_length() - 1
        bit = 1 << j
        inside = (local_adj[j] & mask).bit_count()
        if mask & bit:
            cut += 2 * inside - degs[j]
        else:
            cut += degs[j] - 2 * inside
        mask ^= bit
        yield mask, cut


def _subgraph_masks(graph: Graph, verts):
    """Local index maps and restricted adjacency bitmasks for a vertex set."""
    order = sorted(verts)
    index = {v: i for i, v in enumerate(order)}
    masks = []
    for v in order:
        m = 0
        for w in graph.adj[v]:
            if w in index:
                m |= 1 << index[w]
        masks.append(m)
    return order, index, masks


def verify(graph: Graph, td: RootedDecomposition, k: int, *,
           unbreakable_limit: int = 24) -> VerificationReport:
    """Check the four properties the solver relies on.

    (i) tree-decomposition axioms, (ii) compactness of every non-root
    node, (iii) adhesion sizes at most k, (iv) every bag unbreakable by
    edge cuts of order at most k, the last by exhaustive enumeration of
    all bipartitions of the graph (skipped with a size-limit marker above
    ``unbreakable_limit`` vertices; the other checks still run).
    """
    checks = []
    detail = _axiom_violation(graph, td)
    checks.append(CheckResult("axioms", "fail" if detail else "pass", detail))
    if detail is None:
        ctxs = derive_contexts(graph, td)
        bad = None
        for ctx in ctxs:
            if td.parent[ctx.node] is None:
                continue
            interior = ctx.interior
            if not interior:
                bad = ("empty-interior", ctx.node)
                break
            start = next(iter(interior))
            seen = {start}
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for w in graph.adj[u]:
                    if w in interior and w not in seen:
                        seen.add(w)
                        queue.append(w)
            if seen != interior:
                bad = ("interior-disconnected", ctx.node)
                break
            boundary = frozenset(w for v in interior for w in graph.adj[v]) - interior
            if boundary != ctx.adhesion:
                bad = ("adhesion-mismatch", (ctx.node, boundary, ctx.adhesion))
                break
        checks.append(CheckResult("compactness", "fail" if bad else "pass", bad))
        oversize = [(ctx.node, len(ctx.adhesion)) for ctx in ctxs
                    if len(ctx.adhesion) > k]
        checks.append(CheckResult(
            "adhesion-size", "fail" if oversize else "pass",
            oversize[0] if oversize else None))
    else:
        checks.append(CheckResult("compactness", "skipped", "axioms failed"))
        checks.append(CheckResult("adhesion-size", "skipped", "axioms failed"))

    if graph.n > unbreakable_limit:
        checks.append(CheckResult("unbreakable-bags", "skipped",
                                  f"n={graph.n} exceeds limit {unbreakable_limit}"))
    else:
        order, index, masks = _subgraph_masks(graph, graph.vertices)
        bag_masks = [sum(1 << index[v] for v in bag) for bag in td.bags]
        bag_sizes = [len(bag) for bag in td.bags]
        bad = None
        for mask, cut in _iter_cuts(masks):
            if cut > k:
                continue
            for t, bm in enumerate(bag_masks):
                a = (mask & bm).bit_count()
                if a > k and bag_sizes[t] - a > k:
                    side = frozenset(order[i] for i in range(len(order))
                                     if mask >> i & 1)
                    bad = ("breakable-bag", (t, side, cut))
                    break
            if bad:
                break
        checks.append(CheckResult("unbreakable-bags", "fail" if bad else "pass", bad))
    return VerificationReport(tuple(checks))


class _TreeNode:
    __slots__ = ("bag", "children")

    def __init__(self, bag, children):
        self.bag = bag
        self.children = children


class _Builder:
    """Backtracking search for a decomposition of the required shape.

    Root bags are tried in order: the whole current piece when it is
    unbreakable, then bags derived from minimum-order witness cuts
    (one-sided endpoint sets, then both), then an exhaustive fallback for
    small pieces.  Failures are memoized per (piece, adhesion).
    """

    def __init__(self, graph: Graph, k: int, *,
                 fallback_limit: int = 16, witness_cap: int = 24):
        self.graph = graph
        self.k = k
        self.fallback_limit = fallback_limit
        self.witness_cap = witness_cap
        self._failed = set()

    def build(self, piece: frozenset, adhesion: frozenset):
        key = (piece, adhesion)
        if key in self._failed:
            return None
        order, index, masks = _subgraph_masks(self.graph, piece)
        witnesses = self._witnesses(order, masks)
        if not witnesses:
            return _TreeNode(piece, [])
        for bag in self._candidates(piece, adhesion, order, witnesses):
            node = self._try_bag(piece, adhesion, bag, order, index, masks)
            if node is not None:
                return node
        self._failed.add(key)
        return None

    def _witnesses(self, order, masks):
        """Minimum-order cuts splitting the piece into two sides of more
        than k vertices each; empty iff the piece is unbreakable."""
        k = self.k
        m = len(order)
        if m <= 2 * k + 1:
            return []
        best = None
        found = []
        for mask, cut in _iter_cuts(masks):
            if cut > k:
                continue
            a = mask.bit_count()
            if a > k and m - a > k:
                if best is None or cut < best:
                    best = cut
                    found = [mask]
                elif cut == best:
                    found.append(mask)
        if not found:
            return []
        sides = sorted(
            (tuple(sorted(order[i] for i in range(m) if mask >> i & 1)), mask)
            for mask in found)
        return [(frozenset(side), mask) for side, mask in sides[:self.witness_cap]]

    def _candidates(self, piece, adhesion, order, witnesses):
        seen = set()
        for side, mask in witnesses:
            ends_a = set()
            ends_b = set()
            for u in side:
                for w in self.graph.adj[u]:
                    if w in piece and w not in side:
                        ends_a.add(u)
                        ends_b.add(w)
            for extra in (ends_a, ends_b, ends_a | ends_b):
                bag = adhesion | frozenset(extra)
                if bag not in seen and adhesion < bag < piece:
                    seen.add(bag)
                    yield bag
        if len(piece) <= self.fallback_limit:
            rest = sorted(piece - adhesion)
            for size in range(1, len(rest)):
                for extra in combinations(rest, size):
                    bag = adhesion | frozenset(extra)
                    if bag not in seen and bag < piece:
                        seen.add(bag)
                        yield bag

    def _bag_unbreakable(self, bag, order, masks):
        k = self.k
        if len(bag) <= 2 * k + 1:
            return True
        bag_mask = sum(1 << i for i, v in enumerate(order) if v in bag)
        size = len(bag)
        for mask, cut in _iter_cuts(masks):
            if cut > k:
                continue
            a = (mask & bag_mask).bit_count()
            if a > k and size - a > k:
                return False
        return True

    def _try_bag(self, piece, adhesion, bag, order, index, masks):
        if not self._bag_unbreakable(bag, order, masks):
            return None
        rest = piece - bag
        comps = []
        seen = set()
        for start in sorted(rest):
            if start in seen:
                continue
            comp = {start}
            seen.add(start)
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for w in self.graph.adj[u]:
                    if w in rest and w not in seen:
                        seen.add(w)
                        comp.add(w)
                        queue.append(w)
            comps.append(frozenset(comp))
        children = []
        for comp in comps:
            boundary = frozenset(w for v in comp for w in self.graph.adj[v]
                                 if w in piece) - comp
            if len(boundary) > self.k:
                return None
            sub_piece = comp | boundary
            if sub_piece == piece:
                return None
            child = self.build(sub_piece, boundary)
            if child is None:
                return None
            children.append(child)
        return _TreeNode(bag, children)


def construct(graph: Graph, k: int, *, max_vertices: int = 24) -> RootedDecomposition:
    """Build a decomposition that passes :func:`verify` in full.

    Raises :class:`DecompositionError` rather than ever returning an
    unverified result.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if graph.n > max_vertices:
        raise SizeLimitExceeded(
            f"construction is exhaustive; n={graph.n} exceeds {max_vertices}")
    if not is_connected(graph):
        raise DisconnectedGraph("construction requires a connected graph")
    builder = _Builder(graph, k)
    root = builder.build(frozenset(graph.vertices), frozenset())
    if root is None:
        raise DecompositionError("bag search exhausted without a valid decomposition")
    bags = []
    parents = []
    stack = [(root, None)]
    while stack:
        node, parent = stack.pop()
        idx = len(bags)
        bags.append(frozenset(node.bag))
        parents.append(parent)
        for child in reversed(node.children):
            stack.append((child, idx))
    td = RootedDecomposition(graph.n, tuple(bags), tuple(parents))
    report = verify(graph, td, k, unbreakable_limit=max_vertices)
    if not report.passed:
        raise DecompositionError(
            f"constructed decomposition failed verification: {report.failures()}")
    return td


def serialize(td: RootedDecomposition) -> str:
    """Canonical text form: header, bag lines, parent lines; 1-based ids."""
    max_bag = max(len(b) for b in td.bags)
    lines = [f"s td {td.node_count} {max_bag} {td.n_vertices}"]
    for i, bag in enumerate(td.bags):
        verts = " ".join(str(v + 1) for v in sorted(bag))
        lines.append(f"b {i + 1} {verts}".rstrip())
    for i, p in enumerate(td.parent):
        if p is not None:
            lines.append(f"p {i + 1} {p + 1}")
    return "\n".join(lines) + "\n"


def parse(text: str) -> RootedDecomposition:
    """Parse the text form; rejects malformed input with line numbers."""
    header = None
    bags = {}
    parents = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "s":
            if header is not None:
                raise TdParseError(lineno, "duplicate header line")
            if len(parts) != 5 or parts[1] != "td":
                raise TdParseError(lineno, "header must be 's td <nodes> <maxbag> <n>'")
            try:
                header = tuple(int(x) for x in parts[2:])
            except ValueError:
                raise TdParseError(lineno, "non-integer header field") from None
        elif parts[0] == "b":
            if header is None:
                raise TdParseError(lineno, "bag line before header")
            try:
                fields = [int(x) for x in parts[1:]]
            except ValueError:
                raise TdParseError(lineno, "non-integer bag field") from None
            if not fields:
                raise TdParseError(lineno, "bag line missing node id")
            node, verts = fields[0], fields[1:]
            if not (1 <= node <= header[0]):
                raise TdParseError(lineno, f"bag id {node} out of range")
            if node in bags:
                raise TdParseError(lineno, f"duplicate bag {node}")
            for v in verts:
                if not (1 <= v <= header[2]):
                    raise TdParseError(lineno, f"bag references unknown vertex {v}")
            if len(set(verts)) != len(verts):
                raise TdParseError(lineno, "repeated vertex in bag")
            bags[node] = frozenset(v - 1 for v in verts)
        elif parts[0] == "p":
            if header is None:
                raise TdParseError(lineno, "parent line before header")
            if len(parts) != 3:
                raise TdParseError(lineno, "parent line must be 'p <child> <parent>'")
            try:
                child, parent = int(parts[1]), int(parts[2])
            except ValueError:
                raise TdParseError(lineno, "non-integer parent field") from None
            if not (1 <= child <= header[0] and 1 <= parent <= header[0]):
                raise TdParseError(lineno, "parent line id out of range")
            if child in parents:
                raise TdParseError(lineno, f"duplicate parent line for {child}")
            if child == parent:
                raise TdParseError(lineno, "node cannot be its own parent")
            parents[child] = parent
        else:
            raise TdParseError(lineno, f"unrecognized line type {parts[0]!r}")
    if header is None:
        raise TdParseError(0, "missing header line")
    n_nodes, _, n_vertices = header
    missing = [i for i in range(1, n_nodes + 1) if i not in bags]
    if missing:
        raise TdParseError(0, f"missing bag line for node {missing[0]}")
    parent_tuple = tuple(parents[i + 1] - 1 if i + 1 in parents else None
                         for i in range(n_nodes))
    try:
        return RootedDecomposition(
            n_vertices, tuple(bags[i + 1] for i in range(n_nodes)), parent_tuple)
    except ValueError as exc:
        raise TdParseError(0, str(exc)) from None
