"""Bottom-up dynamic program deciding whether a graph has a d-cut with at
most k crossing edges.

The program runs over a verified rooted decomposition.  Per node it keeps
a cost for every (side-of-adhesion, cross-neighbor budget, nontrivial?)
key: the fewest local crossing edges of any partition of the node's local
graph whose trace on the adhesion matches the side (or its complement),
whose crossing edges form a d-matching, and whose adhesion vertices use
at most their budgeted number of cross neighbors.  Costs live in
{0..k, inf}; any sum exceeding k saturates to infinity, since such
partitions can never take part in an acceptable cut.

Nontrivial entries at a node combine two routes: descend entirely into
one child, or split the bag along a small candidate side, paying for each
child and bag edge the side breaks.  Candidate sides come either from
direct enumeration of small bag subsets or from connected components of
a helper graph (adhesions turned into cliques plus the bag edges)
induced on members of a covering subset family.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .decomposition import (DecompositionError, RootedDecomposition,
                            construct, derive_contexts, verify)
from .graph import (Bipartition, Graph, connected_components, edge_cut,
                    global_min_cut, is_d_cut)
from .multisets import EMPTY_MULTISET, VertexMultiset, bounded_multisets
from .setfamily import build_exhaustive, build_randomized, heuristic_rounds

INFEASIBLE = math.inf


class EnumerationBudgetExceeded(RuntimeError):
    """Direct side enumeration was forced beyond its subset budget."""


class WitnessCertificationError(RuntimeError):
    """A reconstructed witness failed certification; internal bug signal."""


def saturating_sum(values, cap):
    """Sum within {0..cap}; anything beyond cap collapses to infinity."""
    total = 0
    for v in values:
        total += v
        if total > cap:
            return INFEASIBLE
    return total


def edge_cost(edge, side_trace, budget: VertexMultiset):
    """Cost of one bag edge under a side: 0 when both endpoints land on the
    same side, otherwise 1 when the budget grants both endpoints their
    single cross neighbor and infinity when it denies either."""
    if len(side_trace) != 1:
        return 0
    u, v = edge
    if budget.multiplicity(u) == 1 and budget.multiplicity(v) == 1:
        return 1
    return INFEASIBLE


def edge_budget_options(edge):
    """The per-edge budgets: multisets on the endpoints with multiplicity
    at most one (a single edge can give each endpoint one cross neighbor)."""
    return bounded_multisets(edge, 1, 2)


def build_edge_cost_table(bag_edges) -> dict:
    """Materialized edge-cost table keyed by (edge, side trace, budget)."""
    table = {}
    for e in bag_edges:
        u, v = e
        for size in range(3):
            for trace in combinations((u, v), size):
                tr = frozenset(trace)
                for budget in edge_budget_options(e):
                    table[(e, tr, budget)] = edge_cost(e, tr, budget)
    return table


@dataclass(frozen=True)
class SplitItems:
    """Children and bag edges a candidate side splits, with their traces."""

    children: tuple
    edges: tuple
    child_sides: tuple  # ((child, trace, co_trace), ...)
    edge_sides: tuple   # ((edge, trace, co_trace), ...)

    @property
    def count(self) -> int:
        return len(self.children) + len(self.edges)


@dataclass
class BudgetFamily:
    """One budget per split child and per split edge, plus their sum."""

    child_budgets: dict
    edge_budgets: dict
    combined: VertexMultiset

    def key(self):
        return (tuple(sorted((c, b.entries) for c, b in self.child_budgets.items())),
                tuple(sorted((e, b.entries) for e, b in self.edge_budgets.items())))

    def __eq__(self, other):
        if isinstance(other, BudgetFamily):
            return self.key() == other.key()
        return NotImplemented

    def __hash__(self):
        return hash(self.key())


def iter_budget_families(child_items, edge_items, d, k, *,
                         capped_vertices=None, parent_budget=None):
    """Generate every family of budgets for the given split items.

    ``child_items`` is a list of (child key, adhesion vertices); each child
    gets a multiset on its adhesion with multiplicity at most d and size at
    most k.  ``edge_items`` is a list of (edge key, endpoints).  The
    combined sum must stay within 2k total, within d per vertex, and --
    when ``parent_budget`` is given -- within the parent budget on the
    ``capped_vertices``.  Choices are materialized directly under these
    caps, so no duplicates are ever produced.
    """
    child_opts = [(key, bounded_multisets(adh, d, k)) for key, adh in
                  sorted(child_items)]
    edge_opts = [(key, edge_budget_options(ends)) for key, ends in
                 sorted(edge_items)]
    capped = frozenset(capped_vertices) if capped_vertices is not None else frozenset()
    items = [("c", key, opts) for key, opts in child_opts]
    items += [("e", key, opts) for key, opts in edge_opts]
    counts = {}
    chosen = []

    def admissible(ms):
        for v, m in ms.entries:
            new = counts.get(v, 0) + m
            if new > d:
                return False
            if parent_budget is not None and v in capped \
                    and new > parent_budget.multiplicity(v):
                return False
        return True

    def rec(i, total):
        if i == len(items):
            fam = BudgetFamily(
                child_budgets={key: ms for kind, key, ms in chosen if kind == "c"},
                edge_budgets={key: ms for kind, key, ms in chosen if kind == "e"},
                combined=VertexMultiset.from_counts(counts))
            yield fam
            return
        kind, key, opts = items[i]
        for ms in opts:
            if total + ms.size > 2 * k or not admissible(ms):
                continue
            for v, m in ms.entries:
                counts[v] = counts.get(v, 0) + m
            chosen.append((kind, key, ms))
            yield from rec(i + 1, total + ms.size)
            chosen.pop()
            for v, m in ms.entries:
                counts[v] -= m
                if not counts[v]:
                    del counts[v]

    yield from rec(0, 0)


def _combined_of(picks):
    counts = {}
    for _, _, budget in picks:
        for v, m in budget.entries:
            counts[v] = counts.get(v, 0) + m
    return VertexMultiset.from_counts(counts)


class CostTable:
    """The cost table, keyed under the lexicographically smaller of a side
    and its adhesion complement (the semantics are symmetric in the two),
    written exactly once per key."""

    def __init__(self, adhesions):
        self._adhesions = list(adhesions)
        self._data = {}

    def canonical_side(self, node, side):
        adhesion = self._adhesions[node]
        side = frozenset(side)
        if not side <= adhesion:
            raise ValueError(f"side {sorted(side)} not within adhesion of node {node}")
        comp = adhesion - side
        return side if tuple(sorted(side)) <= tuple(sorted(comp)) else comp

    def set(self, node, side, budget, nontrivial, value):
        key = (node, self.canonical_side(node, side), budget, nontrivial)
        if key in self._data:
            raise RuntimeError(f"table key written twice: {key}")
        self._data[key] = value

    def get(self, node, side, budget, nontrivial):
        return self._data[(node, self.canonical_side(node, side), budget, nontrivial)]

    def entries(self):
        yield from self._data.items()

    def __len__(self):
        return len(self._data)


@dataclass
class NodePlan:
    """Per-node evaluation artifacts kept for queries and backtracking."""

    adhesion_order: list
    budgets: list
    sides: list
    groups: dict          # canonical trace -> [sides]
    famtables: dict       # side -> tuple of (usage vec, cost, family)
    child_menu: tuple     # (usage vec, cost, child, child budget)
    mode: str


class DPSolver:
    """Fills the cost table bottom-up over a verified decomposition."""

    def __init__(self, graph: Graph, td: RootedDecomposition, d: int, k: int, *,
                 contexts=None, mode: str = "auto", family_kind: str = "exhaustive",
                 family_seed: int = 0, family_rounds=None,
                 enumerate_budget: int = 10 ** 6, record_choices: bool = True):
        if d < 1 or k < 0:
            raise ValueError("need d >= 1 and k >= 0")
        if mode not in ("auto", "enumerate", "colorcode"):
            raise ValueError(f"unknown mode {mode!r}")
        if family_kind not in ("exhaustive", "randomized"):
            raise ValueError(f"unknown family kind {family_kind!r}")
        self.graph = graph
        self.td = td
        self.d = d
        self.k = k
        self.contexts = list(contexts) if contexts is not None else derive_contexts(graph, td)
        self.children = td.children()
        self.mode = mode
        self.family_kind = family_kind
        self.family_seed = family_seed
        self.family_rounds = family_rounds
        self.enumerate_budget = enumerate_budget
        self.record_choices = record_choices
        self.table = CostTable(ctx.adhesion for ctx in self.contexts)
        self.plans = [None] * td.node_count
        self.stats = {"modes": {}, "families_evaluated": 0, "sides_considered": 0,
                      "overloaded_side_prunes": 0}
        self._choices = {}
        self._budget_cache = {}

    # ------------------------------------------------------------------
    # node evaluation

    def run(self):
        for t in self.td.postorder():
            self.fill_node(t)
        return self

    def root_value(self):
        return self.table.get(self.td.root, frozenset(), EMPTY_MULTISET, 1)

    def trivial_cost(self, node, side):
        """Cost with one empty side: zero when the side does not split the
        adhesion, impossible otherwise."""
        adhesion = self.contexts[node].adhesion
        side = frozenset(side)
        return 0 if side in (frozenset(), adhesion) else INFEASIBLE

    def split_items(self, node, side) -> SplitItems:
        side = frozenset(side)
        kids = []
        kid_sides = []
        for c in self.children[node]:
            child_adhesion = self.contexts[c].adhesion
            trace = side & child_adhesion
            if trace and trace != child_adhesion:
                kids.append(c)
                kid_sides.append((c, trace, child_adhesion - trace))
        edges = []
        edge_sides = []
        for e in self.contexts[node].bag_edges:
            trace = side & frozenset(e)
            if len(trace) == 1:
                edges.append(e)
                edge_sides.append((e, trace, frozenset(e) - trace))
        return SplitItems(tuple(kids), tuple(edges),
                          tuple(kid_sides), tuple(edge_sides))

    def enumerate_budget_families(self, node, side, parent_budget: VertexMultiset):
        """All budget families for the side, restricted by the parent
        budget on the node's adhesion.  Requires at most k split items."""
        split = self.split_items(node, side)
        if split.count > self.k:
            raise ValueError(
                f"side splits {split.count} items; callers must prune beyond k")
        child_items = [(c, sorted(self.contexts[c].adhesion)) for c in split.children]
        edge_items = [(e, e) for e in split.edges]
        return list(iter_budget_families(
            child_items, edge_items, self.d, self.k,
            capped_vertices=self.contexts[node].adhesion,
            parent_budget=parent_budget))

    def family_cost(self, node, side, family: BudgetFamily):
        """Sum of the split children's table entries and the split edges'
        costs under the family's budgets, saturating beyond k."""
        split = self.split_items(node, side)
        return self._family_cost(node, frozenset(side), split, family)

    def _family_cost(self, node, side, split: SplitItems, family: BudgetFamily):
        total = 0
        k = self.k
        for c, trace, _ in split.child_sides:
            total += self.table.get(c, trace, family.child_budgets[c], 1)
            if total > k:
                total = INFEASIBLE
                break
        if total is not INFEASIBLE:
            for e, trace, _ in split.edge_sides:
                total += edge_cost(e, trace, family.edge_budgets[e])
                if total > k:
                    total = INFEASIBLE
                    break
        # Every split item pays at least one crossing edge.
        assert total >= split.count
        return total

    def best_family_cost(self, node, side, budget: VertexMultiset):
        """Minimum family cost for the side under the budget; infinity when
        the side splits more than k items (no family can stay within k)."""
        side = frozenset(side)
        bag = self.contexts[node].bag
        if not side or side == bag or not side <= bag or len(side) > self.k:
            raise ValueError(f"side {sorted(side)} is not a compatible side of node {node}")
        buckets = self._famtables_for(node).get(side)
        if buckets is None:
            buckets = self._build_family_table(node, side)
            self.plans[node].famtables[side] = buckets
        order = self.plans[node].adhesion_order
        pvec = tuple(budget.multiplicity(v) for v in order)
        best = INFEASIBLE
        for uvec, cost, _ in buckets:
            if cost < best and all(u <= q for u, q in zip(uvec, pvec)):
                best = cost
        return best

    def min_cost_via_child(self, node, budget: VertexMultiset):
        """Best nontrivial cost obtainable entirely inside one child whose
        adhesion budget respects this node's budget; infinity at leaves."""
        plan = self.plans[node]
        pvec = tuple(budget.multiplicity(v) for v in plan.adhesion_order)
        best = INFEASIBLE
        for uvec, cost, _c, _b in plan.child_menu:
            if cost < best and all(u <= q for u, q in zip(uvec, pvec)):
                best = cost
        return best

    def min_cost_via_bag(self, node, side_class, budget: VertexMultiset):
        """Best family cost over candidate sides whose adhesion trace is the
        class (or its complement); infinity when no candidate matches."""
        plan = self.plans[node]
        key = self.table.canonical_side(node, side_class)
        pvec = tuple(budget.multiplicity(v) for v in plan.adhesion_order)
        best = INFEASIBLE
        for side in plan.groups.get(key, ()):
            for uvec, cost, _fam in plan.famtables[side]:
                if cost < best and all(u <= q for u, q in zip(uvec, pvec)):
                    best = cost
        return best

    def _famtables_for(self, node):
        if self.plans[node] is None:
            raise RuntimeError(f"node {node} not filled yet")
        return self.plans[node].famtables

    def _budget_options(self, vertices):
        key = frozenset(vertices)
        cached = self._budget_cache.get(key)
        if cached is None:
            cached = bounded_multisets(key, self.d, self.k)
            self._budget_cache[key] = cached
        return cached

    def _build_family_table(self, node, side):
        """Bucket the side's budget families by their usage of the node's
        adhesion, keeping the cheapest family per usage.  Families whose
        cost saturates can never win and are skipped outright; each split
        edge admits exactly one finite-cost budget (both endpoints at one),
        so only the split children contribute real branching."""
        split = self.split_items(node, side)
        if split.count > self.k:
            self.stats["overloaded_side_prunes"] += 1
            return ()
        order = self.plans[node].adhesion_order if self.plans[node] else \
            sorted(self.contexts[node].adhesion)
        k = self.k
        d = self.d
        involved = sorted({v for _, tr, co in split.child_sides
                           for v in (tr | co)} |
                          {v for e in split.edges for v in e})
        idx = {v: i for i, v in enumerate(involved)}
        usage_slots = [idx.get(v) for v in order]

        items = []
        for e, _, _ in split.edge_sides:
            lo, hi = (e[0], e[1]) if e[0] < e[1] else (e[1], e[0])
            budget = VertexMultiset(((lo, 1), (hi, 1)))
            items.append(("e", e, ((budget, 1, ((idx[lo], 1), (idx[hi], 1))),)))
        for c, trace, _ in split.child_sides:
            opts = []
            for b in self._budget_options(self.contexts[c].adhesion):
                val = self.table.get(c, trace, b, 1)
                if val is INFEASIBLE:
                    continue
                # A split child always pays at least one crossing edge.
                assert val >= 1
                opts.append((b, val, tuple((idx[v], m) for v, m in b.entries)))
            if not opts:
                return ()
            items.append(("c", c, tuple(opts)))

        counts = [0] * len(involved)
        chosen = []
        buckets = {}
        total_items = len(items)

        def rec(i, size, cost):
            if i == total_items:
                self.stats["families_evaluated"] += 1
                uvec = tuple(0 if s is None else counts[s] for s in usage_slots)
                cur = buckets.get(uvec)
                if cur is None or cost < cur[0]:
                    buckets[uvec] = (cost, tuple(chosen))
                return
            kind, key, opts = items[i]
            remaining = total_items - i - 1
            for budget, val, incs in opts:
                new_cost = cost + val
                if new_cost + remaining > k:
                    continue
                new_size = size + budget.size
                if new_size > 2 * k:
                    continue
                ok = True
                for slot, m in incs:
                    if counts[slot] + m > d:
                        ok = False
                        break
                if not ok:
                    continue
                for slot, m in incs:
                    counts[slot] += m
                chosen.append((kind, key, budget))
                rec(i + 1, new_size, new_cost)
                chosen.pop()
                for slot, m in incs:
                    counts[slot] -= m

        rec(0, 0, 0)
        out = []
        for uvec, (cost, picks) in buckets.items():
            fam = BudgetFamily(
                child_budgets={key: b for kind, key, b in picks if kind == "c"},
                edge_budgets={key: b for kind, key, b in picks if kind == "e"},
                combined=_combined_of(picks))
            out.append((uvec, cost, fam))
        out.sort(key=lambda item: (item[1], item[0]))
        return tuple(out)

    def _side_candidates(self, node):
        """Candidate sides for splitting the bag, plus the mode used."""
        ctx = self.contexts[node]
        bag_order = sorted(ctx.bag)
        b = len(bag_order)
        subset_count = sum(math.comb(b, i) for i in range(min(self.k, b) + 1))
        mode = self.mode
        if mode == "auto":
            mode = "enumerate" if subset_count <= self.enumerate_budget else "colorcode"
        if mode == "enumerate":
            if subset_count > self.enumerate_budget:
                raise EnumerationBudgetExceeded(
                    f"{subset_count} bag subsets exceed budget {self.enumerate_budget}")
            sides = []
            for size in range(1, min(self.k, b - 1) + 1):
                for combo in combinations(bag_order, size):
                    sides.append(frozenset(combo))
            return sides, mode
        adj = self._helper_graph(node)
        family = self._family_for(node, bag_order)
        seen = set()
        sides = []
        for member in family.members:
            inside = member & ctx.bag
            remaining = set(inside)
            while remaining:
                start = remaining.pop()
                comp = {start}
                stack = [start]
                while stack:
                    u = stack.pop()
                    for w in adj[u]:
                        if w in inside and w not in comp:
                            comp.add(w)
                            stack.append(w)
                remaining -= comp
                side = frozenset(comp)
                if 0 < len(side) <= self.k and side != ctx.bag and side not in seen:
                    seen.add(side)
                    sides.append(side)
        sides.sort(key=sorted)
        return sides, mode

    def _helper_graph(self, node):
        """Adhesions of the node and of each child become cliques; the bag
        edges come along.  Components of induced subgraphs then localize
        candidate sides."""
        ctx = self.contexts[node]
        adj = {v: set() for v in ctx.bag}
        cliques = [ctx.adhesion] + [self.contexts[c].adhesion
                                    for c in self.children[node]]
        for group in cliques:
            members = sorted(group)
            for i, u in enumerate(members):
                for w in members[i + 1:]:
                    adj[u].add(w)
                    adj[w].add(u)
        for u, w in ctx.bag_edges:
            adj[u].add(w)
            adj[w].add(u)
        return adj

    def _family_for(self, node, bag_order):
        if self.family_kind == "exhaustive":
            return build_exhaustive(bag_order)
        a = self.k
        b = self.k * self.k + self.k
        rounds = self.family_rounds
        if rounds is None:
            rounds = heuristic_rounds(len(bag_order), a, b)
        seed = self.family_seed * 100003 + node * 7919
        return build_randomized(bag_order, a, b, seed, rounds)

    def fill_node(self, node):
        ctx = self.contexts[node]
        adhesion = ctx.adhesion
        adhesion_order = sorted(adhesion)
        budgets = bounded_multisets(adhesion, self.d, self.k)
        sides, mode = self._side_candidates(node)
        self.stats["modes"][mode] = self.stats["modes"].get(mode, 0) + 1
        self.stats["sides_considered"] += len(sides)
        plan = NodePlan(adhesion_order=adhesion_order, budgets=budgets, sides=sides,
                        groups={}, famtables={}, child_menu=(), mode=mode)
        self.plans[node] = plan
        for side in sides:
            key = self.table.canonical_side(node, side & adhesion)
            plan.groups.setdefault(key, []).append(side)
            plan.famtables[side] = self._build_family_table(node, side)
        plan.child_menu = self._build_child_menu(node, adhesion_order)

        empty = frozenset()
        seen_keys = set()
        for size in range(len(adhesion_order) + 1):
            for combo in combinations(adhesion_order, size):
                s_key = self.table.canonical_side(node, frozenset(combo))
                if s_key in seen_keys:
                    continue
                seen_keys.add(s_key)
                unsplit = s_key == empty
                for budget in budgets:
                    self.table.set(node, s_key, budget, 0,
                                   0 if unsplit else INFEASIBLE)
                    pvec = tuple(budget.multiplicity(v) for v in adhesion_order)
                    best = INFEASIBLE
                    choice = None
                    for side in plan.groups.get(s_key, ()):
                        for uvec, cost, fam in plan.famtables[side]:
                            if cost < best and all(u <= q for u, q
                                                   in zip(uvec, pvec)):
                                best = cost
                                choice = ("bag", side, fam)
                    if unsplit:
                        for uvec, cost, c, cb in plan.child_menu:
                            if cost < best and all(u <= q for u, q
                                                   in zip(uvec, pvec)):
                                best = cost
                                choice = ("child", c, cb)
                    value = best if best <= self.k else INFEASIBLE
                    self.table.set(node, s_key, budget, 1, value)
                    if self.record_choices and value is not INFEASIBLE:
                        self._choices[(node, s_key, budget)] = choice

    def _build_child_menu(self, node, adhesion_order):
        buckets = {}
        for c in self.children[node]:
            for cb in bounded_multisets(self.contexts[c].adhesion, self.d, self.k):
                cost = self.table.get(c, frozenset(), cb, 1)
                uvec = tuple(cb.multiplicity(v) for v in adhesion_order)
                cur = buckets.get(uvec)
                if cur is None or cost < cur[0]:
                    buckets[uvec] = (cost, c, cb)
        return tuple(sorted(((uvec, cost, c, cb) for uvec, (cost, c, cb)
                             in buckets.items()),
                            key=lambda item: (item[1], item[0])))

    # ------------------------------------------------------------------
    # witness reconstruction

    def rebuild_side(self):
        """The A side of a partition achieving the root value, rebuilt from
        the recorded argmin choices."""
        root = self.td.root
        value = self.root_value()
        if value is INFEASIBLE or value > self.k:
            raise RuntimeError("no witness: root value exceeds k")
        if not self.record_choices:
            raise RuntimeError("witness reconstruction needs recorded choices")
        side = self._rebuild(root, EMPTY_MULTISET, frozenset())
        return frozenset(side)

    def _rebuild(self, node, budget, wanted_trace):
        ctx = self.contexts[node]
        adhesion = ctx.adhesion
        s_key = self.table.canonical_side(node, wanted_trace)
        kind, *data = self._choices[(node, s_key, budget)]
        if kind == "child":
            c, cb = data
            part = self._rebuild(c, cb, frozenset())
        else:
            side, fam = data
            part = set(side)
            for c in self.children[node]:
                child_adhesion = self.contexts[c].adhesion
                trace = side & child_adhesion
                if c in fam.child_budgets:
                    part |= self._rebuild(c, fam.child_budgets[c], trace)
                elif child_adhesion and trace == child_adhesion:
                    part |= self.contexts[c].cone
        if part & adhesion != wanted_trace:
            part = set(ctx.cone) - part
        assert part & adhesion == wanted_trace
        return part


@dataclass
class SolveOptions:
    mode: str = "auto"                 # enumerate | colorcode | auto
    family_kind: str = "exhaustive"    # exhaustive | randomized
    family_seed: int = 0
    family_rounds: int | None = None
    witness: bool = True
    decomposition: RootedDecomposition | None = None
    enumerate_budget: int = 10 ** 6
    max_construct_vertices: int = 24


@dataclass
class SolveResult:
    answer: bool
    witness: Bipartition | None
    cut_size: int | None
    route: str
    stats: dict
    decomposition: RootedDecomposition | None = None
    solver: DPSolver | None = None


def _certify(graph, part, d, k):
    cut = edge_cut(graph, part)
    if not is_d_cut(graph, part, d) or len(cut) > k:
        raise WitnessCertificationError(
            f"witness failed certification: cut size {len(cut)}")
    return len(cut)


def solve(graph: Graph, k: int, d: int, options: SolveOptions = None) -> SolveResult:
    """Decide whether the graph has a d-cut with at most k crossing edges.

    Disconnected graphs are yes instances with an empty cut.  When d >= k
    the question degenerates to whether the global minimum cut is within
    k (every such cut is automatically degree-bounded).  Otherwise the
    dynamic program runs over a verified decomposition; any emitted
    witness is certified before being returned.
    """
    opts = options or SolveOptions()
    if k < 0:
        raise ValueError("k must be non-negative")
    if d < 1:
        raise ValueError("d must be at least 1")
    stats = {"n": graph.n, "m": graph.m, "k": k, "d": d}

    comps = connected_components(graph)
    if len(comps) > 1:
        witness = None
        cut_size = None
        if opts.witness:
            witness = Bipartition.of(graph, comps[0])
            cut_size = _certify(graph, witness, d, k)
        return SolveResult(True, witness, cut_size, "disconnected", stats)

    if d >= k:
        size, cut = global_min_cut(graph)
        answer = size is not None and size <= k
        witness = None
        cut_size = None
        if answer and opts.witness:
            witness = cut
            cut_size = _certify(graph, witness, d, k)
        stats["min_cut"] = size
        return SolveResult(answer, witness, cut_size, "mincut", stats)

    td = opts.decomposition
    if td is not None:
        report = verify(graph, td, k,
                        unbreakable_limit=opts.max_construct_vertices)
        if not report.passed:
            raise DecompositionError(
                f"supplied decomposition failed verification: {report.failures()}")
    else:
        td = construct(graph, k, max_vertices=opts.max_construct_vertices)
    solver = DPSolver(graph, td, d, k, mode=opts.mode,
                      family_kind=opts.family_kind,
                      family_seed=opts.family_seed,
                      family_rounds=opts.family_rounds,
                      enumerate_budget=opts.enumerate_budget,
                      record_choices=opts.witness)
    solver.run()
    value = solver.root_value()
    answer = value <= k
    witness = None
    cut_size = None
    if answer and opts.witness:
        part = Bipartition.of(graph, solver.rebuild_side())
        cut_size = _certify(graph, part, d, k)
        if cut_size > value:
            raise WitnessCertificationError(
                f"witness cut {cut_size} exceeds table value {value}")
        witness = part
    stats.update({
        "root_value": None if value is INFEASIBLE else value,
        "table_entries": len(solver.table),
        "decomposition_nodes": td.node_count,
        "max_bag": max(len(b) for b in td.bags),
        "max_adhesion": max(len(ctx.adhesion) for ctx in solver.contexts),
        "minbeta_modes": solver.stats["modes"],
        "families_evaluated": solver.stats["families_evaluated"],
    })
    if opts.family_kind == "randomized":
        stats["family_seed"] = opts.family_seed
        stats["family_rounds"] = opts.family_rounds
    return SolveResult(answer, witness, cut_size, "dp", stats, td, solver)
