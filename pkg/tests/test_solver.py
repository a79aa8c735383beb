import itertools

import pytest

from conftest import complete_graph, cycle_graph, make_corpus, path_graph
from dcut import (EMPTY_MULTISET, DPSolver, Graph, INFEASIBLE, SolveOptions,
                  VertexMultiset, edge_cut, is_d_cut, is_d_matching, solve)
from dcut.decomposition import (DecompositionError, RootedDecomposition,
                                construct, derive_contexts)
from dcut.solver import (BudgetFamily, EnumerationBudgetExceeded, CostTable,
                         build_edge_cost_table, edge_cost,
                         iter_budget_families, saturating_sum)

ms = VertexMultiset.from_counts


def dp(graph, td, d, k, **kw):
    return DPSolver(graph, td, d, k, **kw).run()


@pytest.fixture
def c4_fixture():
    """C4 with a verified two-node decomposition: root {0,1}, child all."""
    g = cycle_graph(4)
    td = RootedDecomposition(
        4, (frozenset({0, 1}), frozenset({0, 1, 2, 3})), (None, 0))
    return g, td


@pytest.fixture
def nested_p2():
    """P2 with a child bag equal to the root bag: the child's local graph
    has no edges at all (the adhesion-internal edge is excluded).  Not
    compact; used only to exercise the per-node arithmetic."""
    g = path_graph(2)
    td = RootedDecomposition(2, (frozenset({0, 1}), frozenset({0, 1})), (None, 0))
    return g, td


class TestSaturatingSum:
    def test_within_cap(self):
        assert saturating_sum([1, 2], 4) == 3

    def test_exceeding_cap_is_infeasible(self):
        assert saturating_sum([2, 3], 4) is INFEASIBLE

    def test_infinity_propagates(self):
        assert saturating_sum([0, INFEASIBLE], 10) is INFEASIBLE

    def test_empty(self):
        assert saturating_sum([], 0) == 0


class TestEdgeCosts:
    def test_unsplit_traces_cost_zero_for_every_budget(self):
        for budget in (ms({}), ms({0: 1}), ms({1: 1}), ms({0: 1, 1: 1})):
            assert edge_cost((0, 1), frozenset(), budget) == 0
            assert edge_cost((0, 1), frozenset({0, 1}), budget) == 0

    def test_split_trace_with_both_budgeted_costs_one(self):
        assert edge_cost((0, 1), frozenset({0}), ms({0: 1, 1: 1})) == 1
        assert edge_cost((0, 1), frozenset({1}), ms({0: 1, 1: 1})) == 1

    def test_split_trace_with_missing_budget_is_infeasible(self):
        assert edge_cost((0, 1), frozenset({0}), ms({0: 1})) is INFEASIBLE
        assert edge_cost((0, 1), frozenset({0}), ms({1: 1})) is INFEASIBLE
        assert edge_cost((0, 1), frozenset({0}), ms({})) is INFEASIBLE

    def test_materialized_table_values(self):
        table = build_edge_cost_table([(0, 1)])
        assert set(table.values()) <= {0, 1, INFEASIBLE}
        assert len(table) == 4 * 4  # 4 traces x 4 budgets
        assert table[((0, 1), frozenset({0}), ms({0: 1, 1: 1}))] == 1


class TestTrivialCost:
    def test_empty_or_full_side_costs_zero(self, c4_fixture):
        solver = DPSolver(*c4_fixture, 1, 2)
        assert solver.trivial_cost(1, frozenset()) == 0
        assert solver.trivial_cost(1, frozenset({0, 1})) == 0

    def test_proper_split_is_infeasible(self, c4_fixture):
        solver = DPSolver(*c4_fixture, 1, 2)
        assert solver.trivial_cost(1, frozenset({0})) is INFEASIBLE


class TestSplitItems:
    def test_side_splitting_child_and_edge(self, c4_fixture):
        solver = DPSolver(*c4_fixture, 1, 2)
        split = solver.split_items(0, frozenset({0}))
        assert split.children == (1,)
        assert split.edges == ((0, 1),)

    def test_side_containing_child_adhesion_splits_nothing(self, c4_fixture):
        solver = DPSolver(*c4_fixture, 1, 2)
        split = solver.split_items(0, frozenset({0, 1}))
        assert split.count == 0

    def test_edgeless_bag_splits_nothing(self, nested_p2):
        solver = DPSolver(*nested_p2, 1, 2)
        split = solver.split_items(1, frozenset({0}))
        assert split.children == () and split.edges == ()

    def test_traces_recorded(self, c4_fixture):
        solver = DPSolver(*c4_fixture, 1, 2)
        split = solver.split_items(0, frozenset({1}))
        assert split.child_sides == ((1, frozenset({1}), frozenset({0})),)
        assert split.edge_sides == (((0, 1), frozenset({1}), frozenset({0})),)


class TestBudgetFamilies:
    def test_no_split_items_yields_exactly_the_empty_family(self, c4_fixture):
        solver = dp(*c4_fixture, 1, 2)
        fams = solver.enumerate_budget_families(0, frozenset({0, 1}),
                                                EMPTY_MULTISET)
        assert len(fams) == 1
        assert fams[0].combined == EMPTY_MULTISET

    def test_single_split_edge_matches_nested_enumeration(self):
        g = path_graph(2)
        td = RootedDecomposition(2, (frozenset({0, 1}),), (None,))
        solver = dp(g, td, 1, 2)
        fams = solver.enumerate_budget_families(0, frozenset({0}),
                                                EMPTY_MULTISET)
        got = sorted(f.edge_budgets[(0, 1)].entries for f in fams)
        expected = sorted(
            ms({0: a, 1: b}).entries for a in (0, 1) for b in (0, 1))
        assert got == expected

    def test_parent_budget_caps_child_budgets(self):
        fams = list(iter_budget_families(
            [("c1", (0,))], [], d=2, k=3,
            capped_vertices={0}, parent_budget=EMPTY_MULTISET))
        assert len(fams) == 1
        assert fams[0].child_budgets["c1"] == EMPTY_MULTISET

    def test_per_vertex_cap_couples_items(self):
        # two children sharing vertex 0 with d=1: at most one may spend it
        fams = list(iter_budget_families(
            [("c1", (0,)), ("c2", (0,))], [], d=1, k=3))
        spends = sorted((f.child_budgets["c1"].size,
                         f.child_budgets["c2"].size) for f in fams)
        assert spends == [(0, 0), (0, 1), (1, 0)]

    def test_total_size_cap(self):
        # three children, each able to spend up to 2, capped at 2k=4 jointly
        fams = list(iter_budget_families(
            [("c1", (0,)), ("c2", (1,)), ("c3", (2,))], [], d=2, k=2))
        assert all(f.combined.size <= 4 for f in fams)
        brute = sum(1 for spend in itertools.product(range(3), repeat=3)
                    if sum(spend) <= 4)
        assert len(fams) == brute

    def test_combined_is_sum_union(self):
        for fam in iter_budget_families([("c1", (0, 1))],
                                        [((0, 2), (0, 2))], d=2, k=3):
            total = fam.child_budgets["c1"]
            for b in fam.edge_budgets.values():
                total = total.sum_union(b)
            assert total == fam.combined


class TestFamilyCost:
    def test_empty_family_costs_zero(self, c4_fixture):
        solver = dp(*c4_fixture, 1, 2)
        fam = solver.enumerate_budget_families(0, frozenset({0, 1}),
                                               EMPTY_MULTISET)[0]
        assert solver.family_cost(0, frozenset({0, 1}), fam) == 0

    def test_single_edge_family(self):
        g = path_graph(2)
        td = RootedDecomposition(2, (frozenset({0, 1}),), (None,))
        solver = dp(g, td, 1, 2)
        full = BudgetFamily({}, {(0, 1): ms({0: 1, 1: 1})}, ms({0: 1, 1: 1}))
        empty = BudgetFamily({}, {(0, 1): EMPTY_MULTISET}, EMPTY_MULTISET)
        assert solver.family_cost(0, frozenset({0}), full) == 1
        assert solver.family_cost(0, frozenset({0}), empty) is INFEASIBLE


class TestBestFamilyCost:
    def test_overloaded_side_pruned_without_enumeration(self):
        star = Graph(5, [(0, i) for i in range(1, 5)])
        td = RootedDecomposition(5, (frozenset(range(5)),), (None,))
        solver = dp(star, td, 1, 3)
        assert solver.best_family_cost(0, frozenset({0}), EMPTY_MULTISET) \
            is INFEASIBLE
        assert solver.stats["overloaded_side_prunes"] >= 1

    def test_side_splitting_nothing_costs_zero(self, nested_p2):
        # fill only the edgeless leaf: the full run would trip the split-cost
        # sanity assert at the root, which presumes a compact decomposition
        solver = DPSolver(*nested_p2, 1, 2)
        solver.fill_node(1)
        budget = ms({0: 1, 1: 1})
        assert solver.best_family_cost(1, frozenset({0}), budget) == 0

    def test_c4_child_side_costs_two(self, c4_fixture):
        solver = dp(*c4_fixture, 1, 3)
        value = solver.best_family_cost(1, frozenset({2, 3}), ms({0: 1, 1: 1}))
        assert value == 2

    def test_budget_restricts_value(self, c4_fixture):
        solver = dp(*c4_fixture, 1, 3)
        assert solver.best_family_cost(1, frozenset({2, 3}), EMPTY_MULTISET) \
            is INFEASIBLE

    def test_invalid_sides_rejected(self, c4_fixture):
        solver = dp(*c4_fixture, 1, 2)
        with pytest.raises(ValueError):
            solver.best_family_cost(1, frozenset(), EMPTY_MULTISET)
        with pytest.raises(ValueError):
            solver.best_family_cost(1, frozenset({0, 1, 2, 3}), EMPTY_MULTISET)
        with pytest.raises(ValueError):
            solver.best_family_cost(1, frozenset({0, 1, 2}), EMPTY_MULTISET)


class TestBagSplitSearch:
    def test_c4_root_split_value(self, c4_fixture):
        solver = dp(*c4_fixture, 1, 3)
        assert solver.min_cost_via_bag(0, frozenset(), EMPTY_MULTISET) == 2

    def test_singleton_bag_has_no_compatible_side(self):
        g = path_graph(3)
        td = RootedDecomposition(
            3, (frozenset({1}), frozenset({0, 1}), frozenset({1, 2})),
            (None, 0, 0))
        solver = dp(g, td, 1, 2)
        assert solver.min_cost_via_bag(0, frozenset(), EMPTY_MULTISET) \
            is INFEASIBLE
        # the cut still surfaces through the children
        assert solver.root_value() == 1


class TestChildDescent:
    def test_leaf_is_infeasible(self):
        g = path_graph(2)
        td = RootedDecomposition(2, (frozenset({0, 1}),), (None,))
        solver = dp(g, td, 1, 2)
        assert solver.min_cost_via_child(0, EMPTY_MULTISET) is INFEASIBLE

    def test_child_entry_of_two_flows_up(self, c4_fixture):
        solver = dp(*c4_fixture, 1, 3)
        # nontrivial partitions of the child's local path 1-2-3-0 that do
        # not split {0,1} cost two edges
        assert solver.table.get(1, frozenset(), ms({0: 1, 1: 1}), 1) == 2
        assert solver.min_cost_via_child(0, EMPTY_MULTISET) == 2
        assert solver.root_value() == 2


class TestFillValues:
    def test_p2_single_node_value_is_one(self):
        g = path_graph(2)
        td = RootedDecomposition(2, (frozenset({0, 1}),), (None,))
        for k in (1, 2, 3):
            solver = dp(g, td, 1, k)
            assert solver.root_value() == 1

    def test_split_side_entries_at_least_one_on_verified_decomposition(self):
        g = cycle_graph(6)
        td = construct(g, 2)
        solver = dp(g, td, 1, 2)
        for (node, side, budget, nontrivial), value in solver.table.entries():
            adhesion = solver.contexts[node].adhesion
            if nontrivial and side and side != adhesion:
                assert value >= 1

    def test_complement_symmetry_of_lookups(self, c4_fixture):
        solver = dp(*c4_fixture, 1, 2)
        adhesion = solver.contexts[1].adhesion
        for budget in solver.plans[1].budgets:
            for r in range(len(adhesion) + 1):
                for combo in itertools.combinations(sorted(adhesion), r):
                    side = frozenset(combo)
                    for ne in (0, 1):
                        assert solver.table.get(1, side, budget, ne) == \
                            solver.table.get(1, adhesion - side, budget, ne)

    def test_table_rejects_double_write(self):
        table = CostTable([frozenset()])
        table.set(0, frozenset(), EMPTY_MULTISET, 1, 0)
        with pytest.raises(RuntimeError, match="twice"):
            table.set(0, frozenset(), EMPTY_MULTISET, 1, 1)

    def test_budget_monotonicity(self, c4_fixture):
        solver = dp(*c4_fixture, 1, 3)
        entries = dict(solver.table.entries())
        for (node, side, budget, ne), value in entries.items():
            for (node2, side2, budget2, ne2), value2 in entries.items():
                if (node, side, ne) == (node2, side2, ne2) \
                        and budget.included_in(budget2):
                    assert value2 <= value


class TestSolveEndToEnd:
    def test_canonical_instances(self):
        p2 = path_graph(2)
        c4 = cycle_graph(4)
        k4 = complete_graph(4)
        two_edges = Graph(4, [(0, 1), (2, 3)])
        assert solve(p2, 1, 1).answer
        assert not solve(c4, 1, 1).answer
        assert solve(c4, 2, 1).answer
        for k in range(6):
            assert not solve(k4, k, 1).answer
        assert solve(k4, 4, 2).answer
        assert solve(two_edges, 0, 1).answer

    def test_routes(self):
        assert solve(Graph(4, [(0, 1), (2, 3)]), 0, 1).route == "disconnected"
        assert solve(path_graph(2), 1, 1).route == "mincut"
        assert solve(cycle_graph(4), 2, 1).route == "dp"

    def test_witnesses_certified(self):
        for g, k, d in [(path_graph(2), 1, 1), (cycle_graph(4), 2, 1),
                        (complete_graph(4), 4, 2),
                        (Graph(4, [(0, 1), (2, 3)]), 0, 1)]:
            res = solve(g, k, d)
            assert res.answer
            assert is_d_cut(g, res.witness, d)
            cut = edge_cut(g, res.witness)
            assert len(cut) == res.cut_size <= k
            assert is_d_matching(g, cut, d)

    def test_witness_deterministic(self):
        a = solve(cycle_graph(6), 2, 1)
        b = solve(cycle_graph(6), 2, 1)
        assert a.witness == b.witness

    def test_witness_skippable(self):
        res = solve(cycle_graph(4), 2, 1, SolveOptions(witness=False))
        assert res.answer and res.witness is None

    def test_dp_value_matches_oracle_minimum(self):
        from dcut import brute_force_min_dcut
        g = cycle_graph(6)
        res = solve(g, 3, 1)
        assert res.stats["root_value"] == \
            brute_force_min_dcut(g, 1).min_cut_size == 2

    def test_supplied_decomposition_used(self, c4_fixture):
        g, td = c4_fixture
        res = solve(g, 2, 1, SolveOptions(decomposition=td))
        assert res.answer and res.decomposition == td

    def test_bad_supplied_decomposition_rejected(self):
        g = cycle_graph(4)
        bad = RootedDecomposition(
            4, (frozenset({0, 1}), frozenset({2, 3})), (None, 0))
        with pytest.raises(DecompositionError):
            solve(g, 2, 1, SolveOptions(decomposition=bad))

    def test_input_validation(self):
        with pytest.raises(ValueError):
            solve(path_graph(2), -1, 1)
        with pytest.raises(ValueError):
            solve(path_graph(2), 1, 0)

    def test_stats_fields(self):
        res = solve(cycle_graph(4), 2, 1)
        for field in ("root_value", "table_entries", "decomposition_nodes",
                      "max_bag", "max_adhesion", "minbeta_modes"):
            assert field in res.stats


class TestModes:
    def test_enumerate_and_colorcode_tables_identical(self):
        for g in [cycle_graph(6), complete_graph(5),
                  Graph(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5),
                            (5, 3)])]:
            for d, k in [(1, 2), (1, 3), (2, 3)]:
                td = construct(g, k)
                one = dp(g, td, d, k, mode="enumerate")
                two = dp(g, td, d, k, mode="colorcode",
                         family_kind="exhaustive")
                assert dict(one.table.entries()) == dict(two.table.entries())

    def test_starved_family_errs_toward_no(self):
        # one random subset plus the empty set misses most good sets: every
        # cost may only move up, so answers can only flip yes -> no
        for g in make_corpus(8, seed=2024, n_lo=5, n_hi=9):
            for d, k in [(1, 2), (1, 4)]:
                td = construct(g, k)
                full = dp(g, td, d, k, mode="enumerate")
                starved = dp(g, td, d, k, mode="colorcode",
                             family_kind="randomized", family_seed=1,
                             family_rounds=1, record_choices=False)
                for key, value in full.table.entries():
                    assert starved.table._data[key] >= value

    def test_enumerate_budget_guard(self):
        g = complete_graph(5)
        td = construct(g, 2)
        with pytest.raises(EnumerationBudgetExceeded):
            dp(g, td, 1, 2, mode="enumerate", enumerate_budget=3)

    def test_auto_uses_enumerate_at_desk_scale(self):
        res = solve(cycle_graph(6), 2, 1)
        assert res.stats["minbeta_modes"] == {"enumerate": res.stats["decomposition_nodes"]}

    def test_rejects_unknown_mode(self, c4_fixture):
        with pytest.raises(ValueError):
            DPSolver(*c4_fixture, 1, 2, mode="magic")
        with pytest.raises(ValueError):
            DPSolver(*c4_fixture, 1, 2, family_kind="psychic")


def local_cut_edges(view, side):
    return [e for e in view.edges if (e[0] in side) != (e[1] in side)]


class TestRealizability:
    """Finite side costs are achieved by a real partition of the local graph."""

    @pytest.mark.parametrize("graph,k,d", [
        (cycle_graph(4), 2, 1),
        (cycle_graph(6), 3, 1),
        (Graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)]), 2, 1),
        (complete_graph(4), 4, 2),
    ])
    def test_best_family_cost_realizable(self, graph, k, d):
        td = construct(graph, k)
        solver = dp(graph, td, d, k)
        for node in range(td.node_count):
            ctx = solver.contexts[node]
            plan = solver.plans[node]
            rest = sorted(ctx.cone - ctx.bag)
            for side in plan.sides:
                for budget in plan.budgets:
                    value = solver.best_family_cost(node, side, budget)
                    if value is INFEASIBLE:
                        continue
                    achieved = None
                    for r in range(len(rest) + 1):
                        for extra in itertools.combinations(rest, r):
                            a = set(side) | set(extra)
                            cut = local_cut_edges(ctx.local_graph, a)
                            if len(cut) > value:
                                continue
                            degree = {}
                            for u, v in cut:
                                degree[u] = degree.get(u, 0) + 1
                                degree[v] = degree.get(v, 0) + 1
                            if any(c > d for c in degree.values()):
                                continue
                            if any(degree.get(v, 0) > budget.multiplicity(v)
                                   for v in ctx.adhesion):
                                continue
                            achieved = a
                            break
                        if achieved is not None:
                            break
                    assert achieved is not None, (node, side, budget, value)
