import json
from pathlib import Path

import pytest
from hypothesis import given, settings

from dicolor.digraph import (
    Digraph,
    UndirectedGraph,
    all_graphs,
    chromatic_number_exact,
    complete_graph,
    cycle_graph,
    directed_cycle,
    path_graph,
    random_dag,
    underlying_graph,
    wheel_graph,
)
from dicolor.errors import DigraphError, SizeLimitError
from dicolor.partitions import (
    CHAIN_HEADER,
    achromatic_number,
    chain_check,
    chi_equals_psi_check,
    complete_partitions_by_order,
    feasible_partitions,
    grundy_number,
    interpolation_check,
    is_complete_partition,
    psi_sd,
)
from dicolor.sequences import min_over_orders

from conftest import brute_psi, brute_psi_sd, digraphs, graphs, set_partitions

FIXTURES = Path(__file__).parent / "fixtures"
FIG7 = Digraph(5, [(0, 1), (1, 2), (2, 3), (0, 4), (4, 3), (0, 2), (0, 3)])
C3 = directed_cycle(3)
# Orientation of the 4-cycle with psi_sd = 3 above psi = 2.
C4_SPLIT = Digraph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


class TestCompleteness:
    def test_figure7_partition(self):
        assert is_complete_partition(FIG7, [[0], [1, 4], [2], [3]])

    def test_singletons_of_complete(self):
        assert is_complete_partition(complete_graph(5), [[v] for v in range(5)])

    def test_unjoined_classes(self):
        assert not is_complete_partition(path_graph(4), [[0], [3], [1, 2]])

    @pytest.mark.parametrize("bad", [[[0], [1]], [[0, 1], [1, 2]], [[0], [], [1, 2]], [[0, 5], [1, 2]]])
    def test_malformed(self, bad):
        with pytest.raises(DigraphError):
            is_complete_partition(path_graph(3), bad)


class TestEnumeration:
    @pytest.mark.parametrize("p", range(0, 7))
    def test_unrestricted_count_is_bell(self, p):
        bell = [1, 1, 2, 5, 15, 52, 203]
        assert sum(1 for _ in feasible_partitions(p, lambda v, c: True)) == bell[p]
        assert sum(1 for _ in set_partitions(p)) == bell[p]

    def test_restricted_growth_order(self):
        seen = [list(m) for m in feasible_partitions(3, lambda v, c: True)]
        assert seen == [[7], [3, 4], [5, 2], [1, 6], [1, 2, 4]]


class TestAchromatic:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_complete(self, n):
        assert achromatic_number(complete_graph(n))[0] == n

    def test_edgeless(self):
        assert achromatic_number(UndirectedGraph(5))[0] == 1

    def test_path4_fixture(self):
        # Exhaustive scan of all 15 set partitions of four vertices.
        assert brute_psi(path_graph(4)) == 3
        k, part = achromatic_number(path_graph(4))
        assert k == 3 and is_complete_partition(path_graph(4), part)

    @pytest.mark.parametrize("G,expected", [
        (cycle_graph(5), 3),
        (cycle_graph(6), 3),
        (wheel_graph(4), 3),
        (wheel_graph(5), 4),
    ])
    def test_small_families(self, G, expected):
        assert achromatic_number(G)[0] == expected == brute_psi(G)

    def test_limit(self):
        with pytest.raises(SizeLimitError):
            achromatic_number(UndirectedGraph(11))

    @pytest.mark.parametrize("p", range(1, 6))
    def test_exhaustive(self, p):
        for G in all_graphs(p):
            k, part = achromatic_number(G)
            assert k == brute_psi(G) == len(part)
            assert is_complete_partition(G, part)


class TestPsiSd:
    def test_figure7(self):
        k, part = psi_sd(FIG7)
        assert k == 4 and is_complete_partition(FIG7, part)

    def test_cycle(self):
        assert psi_sd(C3) == (3, [[0], [1], [2]])

    def test_single(self):
        assert psi_sd(Digraph(1))[0] == 1

    def test_split_square(self):
        assert psi_sd(C4_SPLIT)[0] == 3
        assert achromatic_number(underlying_graph(C4_SPLIT))[0] == 2

    @settings(max_examples=60, deadline=None)
    @given(digraphs(max_p=6))
    def test_against_brute_force(self, D):
        k, part = psi_sd(D)
        assert k == brute_psi_sd(D)
        assert is_complete_partition(D, part)

    @given(digraphs(max_p=6))
    def test_at_least_achromatic(self, D):
        # every independent set induces an acyclic subdigraph
        assert psi_sd(D)[0] >= achromatic_number(underlying_graph(D))[0]


class TestGrundy:
    @pytest.mark.parametrize("n", range(1, 6))
    def test_complete(self, n):
        assert grundy_number(complete_graph(n))[0] == n

    def test_figure4b(self):
        G = UndirectedGraph(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)])
        assert grundy_number(G)[0] >= 4

    def test_edgeless(self):
        assert grundy_number(UndirectedGraph(4)) == (1, [0, 1, 2, 3])

    @pytest.mark.parametrize("G,expected", [
        (cycle_graph(5), 3), (cycle_graph(6), 3), (path_graph(4), 3), (complete_graph(5), 5),
    ])
    def test_families(self, G, expected):
        assert grundy_number(G)[0] == expected

    def test_can_fall_below_psi(self):
        # Frozen from the exhaustive p = 5 scan: a path on three vertices plus a disjoint edge.
        G = UndirectedGraph(5, [(0, 3), (0, 4), (1, 2)])
        assert grundy_number(G)[0] == 2
        assert achromatic_number(G)[0] == brute_psi(G) == 3

    @settings(max_examples=40, deadline=None)
    @given(graphs(max_p=7))
    def test_at_most_psi(self, G):
        assert grundy_number(G)[0] <= achromatic_number(G)[0]

    @settings(max_examples=25, deadline=None)
    @given(graphs(min_p=7, max_p=7))
    def test_min_greedy_is_chromatic(self, G):
        assert min_over_orders(G, "greedy")[0] == chromatic_number_exact(G)[0]


class TestInterpolation:
    def test_complete(self):
        r = interpolation_check(complete_graph(4))
        assert (r.chi, r.psi, list(r.witnesses)) == (4, 4, [4])

    def test_c5(self):
        r = interpolation_check(cycle_graph(5))
        assert r.holds and list(r.witnesses) == [3]

    def test_edgeless(self):
        r = interpolation_check(UndirectedGraph(3))
        assert r.holds and list(r.witnesses) == [1]

    def test_json(self):
        data = interpolation_check(path_graph(4)).to_json()
        assert data["chi"] == 2 and data["psi"] == 3 and data["holds"]
        assert set(data["table"]) == {"2", "3"}

    def test_by_order_witnesses(self):
        table = complete_partitions_by_order(path_graph(4))
        assert sorted(table) == [2, 3]
        assert all(is_complete_partition(path_graph(4), part) for part in table.values())

    @pytest.mark.parametrize("p", range(1, 6))
    def test_exhaustive(self, p):
        for G in all_graphs(p):
            assert interpolation_check(G).holds


class TestChiEqualsPsi:
    @pytest.mark.parametrize("G,expected", [
        (complete_graph(5), (True, 5, 5)),
        (cycle_graph(5), (True, 3, 3)),
        (wheel_graph(4), (True, 3, 3)),
        (wheel_graph(5), (True, 4, 4)),
        (cycle_graph(6), (False, 2, 3)),
        (path_graph(4), (False, 2, 3)),
    ])
    def test_values(self, G, expected):
        assert chi_equals_psi_check(G) == expected


class TestChain:
    def test_header(self):
        assert chain_check(C3).to_json()["header"] == CHAIN_HEADER

    @pytest.mark.parametrize("seed", range(4))
    def test_acyclic_bottom(self, seed):
        v = chain_check(random_dag(6, 0.5, seed=seed)).values
        assert v["chi_d"] == 1 and all(x >= 1 for x in v.values())

    def test_figure7(self):
        r = chain_check(FIG7)
        assert r.values["psi_sd"] == 4
        assert r.values["psi_G"] == achromatic_number(underlying_graph(FIG7))[0]

    def test_split_square_fails_reverse_link(self):
        assert "psi_sd <= psi_G" in chain_check(C4_SPLIT).failed

    def test_limit(self):
        with pytest.raises(SizeLimitError):
            chain_check(Digraph(9))

    def test_golden_exhaustive_p4_table(self):
        golden = json.loads((FIXTURES / "chain_p4.json").read_text())
        from dicolor.digraph import all_digraphs

        tally = {}
        count = 0
        for p in range(1, 5):
            for D in all_digraphs(p):
                count += 1
                for name, ok in chain_check(D).links:
                    entry = tally.setdefault(name, {"holds": 0, "fails": 0})
                    entry["holds" if ok else "fails"] += 1
        assert {"instances": count, "links": tally} == golden
