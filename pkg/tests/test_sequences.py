from itertools import permutations, product

import pytest
from hypothesis import given, settings

from dicolor.dichromatic import chi_d_exact
from dicolor.digraph import (
    Digraph,
    UndirectedGraph,
    all_digraphs,
    chromatic_number_exact,
    directed_cycle,
    is_acyclic,
    random_dag,
    underlying_graph,
)
from dicolor.errors import DigraphError, SizeLimitError
from dicolor.sequences import (
    SequenceColoring,
    forward_constraint_graph,
    max_over_orders,
    min_over_orders,
    prop9_construct,
    s_number_exact,
    s_number_greedy,
    validate_sequence_coloring,
)

from conftest import digraphs, graphs

SEQ = SequenceColoring
C3 = directed_cycle(3)
FIG2 = Digraph(3, [(1, 0), (0, 2), (1, 2), (2, 1)])
FIG4B = UndirectedGraph(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)])
TREE_T = UndirectedGraph(6, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)])
FIG1B_PRINTED = SEQ(((0, 1), (2, 2), (1, 2)))

# Figure 1(b) as drawn: arrowheads on all three sides of the triangle.
FIG1B_DRAWN = [(0, 1), (1, 2), (2, 0)]


class TestValidate:
    def test_figure1b_orientation_resolution(self):
        # Two-arc reading (v1->v2 plus the v2-v3 side): only v2->v3 makes the printed sequence valid.
        verdicts = {
            arc: validate_sequence_coloring(Digraph(3, [(0, 1), arc]), FIG1B_PRINTED)[0]
            for arc in [(1, 2), (2, 1)]
        }
        assert verdicts == {(1, 2): True, (2, 1): False}
        assert validate_sequence_coloring(Digraph(3, FIG1B_DRAWN), FIG1B_PRINTED)[0]

    def test_figure1b_violation_report(self):
        ok, violations = validate_sequence_coloring(Digraph(3, [(0, 1), (2, 1)]), FIG1B_PRINTED)
        assert not ok and violations == [(1, 2, (2, 1))]

    def test_figure1c(self):
        D = Digraph(3, [(0, 1), (0, 2)])
        assert validate_sequence_coloring(D, SEQ(((2, 1), (1, 1), (0, 1))))[0]

    def test_figure3(self):
        assert validate_sequence_coloring(C3, SEQ(((0, 1), (2, 1), (1, 2))))[0]

    def test_not_permutation(self):
        with pytest.raises(DigraphError):
            validate_sequence_coloring(C3, SEQ(((0, 1), (0, 1), (1, 2))))

    def test_non_positive_color(self):
        with pytest.raises(DigraphError):
            validate_sequence_coloring(C3, SEQ(((0, 0), (1, 1), (2, 2))))

    @pytest.mark.parametrize("p", [1, 2, 3])
    def test_accepts_exactly_proper_colorings_of_constraint_graph(self, p):
        for D in all_digraphs(p):
            for order in permutations(range(p)):
                H = forward_constraint_graph(D, order)
                for colors in product(range(1, p + 1), repeat=p):
                    proper = all(colors[u] != colors[v] for u, v in H.edges)
                    assert validate_sequence_coloring(D, SEQ.from_order(order, colors))[0] == proper

    @settings(max_examples=40, deadline=None)
    @given(digraphs(min_p=4, max_p=4))
    def test_equivalence_p4(self, D):
        for order in permutations(range(4)):
            H = forward_constraint_graph(D, order)
            for colors in product(range(1, 4), repeat=4):
                proper = all(colors[u] != colors[v] for u, v in H.edges)
                assert validate_sequence_coloring(D, SEQ.from_order(order, colors))[0] == proper


class TestConstraintGraph:
    def test_cycle_natural_order(self):
        H = forward_constraint_graph(C3, [0, 1, 2])
        assert sorted(H.edges) == [(0, 1), (1, 2)]

    def test_reverse_topological_is_edgeless(self):
        D = random_dag(7, 0.5, seed=5)
        order = is_acyclic(D)[1][::-1]
        assert not forward_constraint_graph(D, order).edges

    def test_forward_chain_triangle(self):
        D, order = prop9_construct(3)
        assert len(forward_constraint_graph(D, order).edges) == 3

    @given(graphs(max_p=6))
    def test_symmetric_digraph_gives_graph_itself(self, G):
        D = G.as_digraph()
        for order in [list(range(G.p)), list(range(G.p))[::-1]]:
            assert forward_constraint_graph(D, order) == G


class TestSNumbers:
    def test_exact_acyclic_reverse_topological(self):
        D = random_dag(6, 0.5, seed=1)
        assert s_number_exact(D, is_acyclic(D)[1][::-1])[0] == 1

    def test_exact_cycle_every_order(self):
        values = {order: s_number_exact(C3, order)[0] for order in permutations(range(3))}
        assert set(values.values()) == {2}

    def test_exact_forward_chain(self):
        D, order = prop9_construct(3)
        k, seq = s_number_exact(D, order)
        assert k == 3 and validate_sequence_coloring(D, seq)[0]

    def test_greedy_figure4b(self):
        k, seq = s_number_greedy(FIG4B.as_digraph(), [0, 1, 4, 2, 3])
        assert k == 4
        assert seq.pairs == ((0, 1), (1, 2), (4, 2), (2, 3), (3, 4))

    def test_greedy_figure5b(self):
        assert s_number_greedy(TREE_T.as_digraph(), [0, 2, 4, 5, 1, 3])[0] == 3

    @pytest.mark.parametrize("n", range(1, 9))
    def test_greedy_forward_chain(self, n):
        D, order = prop9_construct(n)
        assert s_number_greedy(D, order)[0] == n

    def test_exact_on_graph_is_chromatic(self):
        assert s_number_exact(FIG4B.as_digraph(), [0, 1, 4, 2, 3])[0] == 3

    @given(digraphs(max_p=7))
    def test_greedy_at_least_exact(self, D):
        order = list(range(D.p))[::-1]
        kg, seq = s_number_greedy(D, order)
        ke, _ = s_number_exact(D, order)
        assert kg >= ke
        assert validate_sequence_coloring(D, seq)[0]

    @settings(max_examples=30, deadline=None)
    @given(graphs(max_p=6))
    def test_exact_on_graph_every_order(self, G):
        chi = chromatic_number_exact(G)[0]
        D = G.as_digraph()
        for order in [list(range(G.p)), list(range(G.p))[::-1]]:
            assert s_number_exact(D, order)[0] == chi


class TestScans:
    def test_cycle_min(self):
        assert min_over_orders(C3, "exact") == (2, [0, 1, 2])

    @pytest.mark.parametrize("seed", range(5))
    def test_acyclic_min(self, seed):
        assert min_over_orders(random_dag(8, 0.4, seed=seed), "exact")[0] == 1

    def test_figure2_min(self):
        assert min_over_orders(FIG2, "exact")[0] == 2

    def test_edgeless_max(self):
        for mode in ("exact", "greedy"):
            assert max_over_orders(UndirectedGraph(4), mode)[0] == 1

    def test_figure4b_greedy_max(self):
        # Frozen from full enumeration of the 120 orders; the figure's own order attains it.
        best = max(s_number_greedy(FIG4B.as_digraph(), o)[0] for o in permutations(range(5)))
        assert best == 4
        assert max_over_orders(FIG4B, "greedy") == (4, [0, 1, 2, 4, 3])

    def test_cycle_greedy_max(self):
        best = max(s_number_greedy(C3, o)[0] for o in permutations(range(3)))
        assert best == 2 and max_over_orders(C3, "greedy")[0] == 2

    def test_lexicographic_tie_break(self):
        assert min_over_orders(Digraph(3), "greedy") == (1, [0, 1, 2])

    def test_limit(self):
        with pytest.raises(SizeLimitError):
            min_over_orders(Digraph(10), "exact")

    def test_bad_mode(self):
        with pytest.raises(ValueError):
            min_over_orders(C3, "fast")

    @pytest.mark.parametrize("p", [1, 2, 3, 4])
    def test_min_scans_equal_chi_d_exhaustive(self, p):
        for D in all_digraphs(p):
            chi = chi_d_exact(D)[0]
            assert min_over_orders(D, "exact")[0] == chi
            assert min_over_orders(D, "greedy")[0] == chi

    @settings(max_examples=40, deadline=None)
    @given(digraphs(min_p=5, max_p=5))
    def test_min_scans_equal_chi_d_p5(self, D):
        chi = chi_d_exact(D)[0]
        assert min_over_orders(D, "exact")[0] == chi
        assert min_over_orders(D, "greedy")[0] == chi

    @settings(max_examples=25, deadline=None)
    @given(graphs(max_p=6))
    def test_graph_min_greedy_is_chromatic(self, G):
        assert min_over_orders(G, "greedy")[0] == chromatic_number_exact(G)[0]


class TestProp9:
    def test_single(self):
        D, order = prop9_construct(1)
        assert D.p == 1 and s_number_greedy(D, order)[0] == 1

    def test_three_is_figure6b(self):
        D, order = prop9_construct(3)
        assert D.sorted_arcs() == [(0, 1), (0, 2), (1, 2)]
        assert [c for _, c in s_number_greedy(D, order)[1].pairs] == [1, 2, 3]

    def test_five(self):
        D, order = prop9_construct(5)
        assert s_number_greedy(D, order)[0] == 5
        assert chi_d_exact(D)[0] == 1

    def test_bad_n(self):
        with pytest.raises(DigraphError):
            prop9_construct(0)

    def test_underlying_is_complete(self):
        D, _ = prop9_construct(6)
        assert len(underlying_graph(D).edges) == 15
