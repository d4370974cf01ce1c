import networkx as nx
import pytest

from apps.core.api.exceptions import ValidationException
from apps.graph.model import KLabeledGraph, WeightedGraph
from apps.graph.selectors import (
    complete_graph,
    connected_simple_graphs,
    cycle_graph,
    enumerate_k_labeled,
    from_networkx,
    path_graph,
    simple_patterns,
)
from apps.hom.services import hom, hom_partial
from apps.homdet.model import IsoVerdict, Verdict
from apps.homdet.services import (
    decide_isomorphic,
    distinguish_all,
    gadget_apexes,
    gadget_decomposition_value,
    gadget_join,
    hom_profile,
    isomorphism_via_gadget,
    pattern_catalog,
    verify_gadget_symmetry,
)
from apps.symmetry.services import is_isomorphism, twin_quotient


@pytest.fixture
def centered_p3() -> WeightedGraph:
    return WeightedGraph.from_edges(3, [(0, 1), (0, 2)])


class TestGadget:
    def test_layout(self, p2, k3):
        gadget = gadget_join(p2, k3)
        v1, v2 = gadget_apexes(p2, k3)
        assert (gadget.m, v1, v2) == (7, 5, 6)
        assert gadget.beta[v1][v1] == 1 and gadget.beta[v1][v2] == 0
        assert [gadget.beta[v1][i] for i in range(5)] == [1, 1, 0, 0, 0]
        assert [gadget.beta[v2][i] for i in range(5)] == [0, 0, 1, 1, 1]

    def test_isomorphic_inputs_give_witness(self, p3, centered_p3):
        witness = isomorphism_via_gadget(p3, centered_p3)
        assert witness is not None and is_isomorphism(witness, p3, centered_p3)

    def test_non_isomorphic_inputs(self, p3, k3):
        assert isomorphism_via_gadget(p3, k3) is None
        assert isomorphism_via_gadget(p3, cycle_graph(4)) is None

    def test_apex_symmetry_and_decomposition(self, p3, centered_p3):
        report = verify_gadget_symmetry(p3, centered_p3, simple_patterns(3, connected_only=True, k=1))
        assert report.holds
        assert report.patterns == len(simple_patterns(3, connected_only=True, k=1))

    @pytest.mark.slow
    def test_apex_symmetry_on_five_node_patterns(self, p3, centered_p3):
        patterns = simple_patterns(5, connected_only=True, k=1)
        report = verify_gadget_symmetry(p3, centered_p3, patterns)
        assert report.patterns >= 50
        assert report.holds
        assert verify_gadget_symmetry(p3, p3, patterns).holds

    def test_apexes_differ_for_distinct_graphs(self, p3, k3):
        report = verify_gadget_symmetry(p3, k3, simple_patterns(3, connected_only=True, k=1))
        assert report.mismatches
        assert not report.decomposition_mismatches

    def test_decomposition_value_for_edge(self, edge_1, p3):
        gadget = gadget_join(p3, p3)
        v1, _ = gadget_apexes(p3, p3)
        # S = {标号节点}：hom(单点, P3) = 3；S = 全部：1
        assert gadget_decomposition_value(edge_1, p3) == 4 == hom_partial(edge_1, gadget, (v1,))

    def test_decomposition_needs_connected_one_labeled(self, p3):
        with pytest.raises(ValidationException):
            gadget_decomposition_value(KLabeledGraph.empty(1, 2), p3)

    def test_patterns_must_be_one_labeled(self, p3):
        with pytest.raises(ValidationException):
            verify_gadget_symmetry(p3, p3, simple_patterns(2))


class TestProfiles:
    def test_profile_is_invariant_under_twin_quotient(self, c4):
        catalog = pattern_catalog(4)
        assert hom_profile(c4, catalog) == hom_profile(twin_quotient(c4), catalog)

    def test_profile_rejects_multigraph_patterns(self, p3):
        with pytest.raises(ValidationException):
            hom_profile(p3, enumerate_k_labeled(0, 2, 2, 2))


class TestDecide:
    def test_triangle_versus_path(self, k3, p3):
        verdict = decide_isomorphic(k3, p3)
        assert verdict.verdict is Verdict.DISTINGUISHED
        first, second = verdict.values
        assert first != second
        assert (hom(verdict.pattern, k3), hom(verdict.pattern, p3)) == (first, second)
        triangle = KLabeledGraph(k=0, n=3, edges=((0, 1, 1), (0, 2, 1), (1, 2, 1)))
        assert hom(triangle, k3) == 6 and hom(triangle, p3) == 0

    def test_relabeled_path(self, p3, centered_p3):
        verdict = decide_isomorphic(p3, centered_p3)
        assert verdict.verdict is Verdict.ISOMORPHIC
        assert is_isomorphism(verdict.permutation, p3, centered_p3)

    def test_weights_matter(self, p2, graphs):
        verdict = decide_isomorphic(p2, graphs["p2_skewed"])
        assert verdict.verdict is Verdict.DISTINGUISHED

    def test_same_profile_different_graphs_is_inconclusive(self):
        # 单点与空图上的轮廓相同，区分需要一条边
        g1 = WeightedGraph.from_edges(2, [(0, 1)], alpha=[1, 2])
        g2 = WeightedGraph.from_edges(2, [(0, 0), (1, 1)], alpha=[1, 2])
        verdict = decide_isomorphic(g1, g2, 1)
        assert verdict.verdict is Verdict.INCONCLUSIVE
        assert verdict.bounds.max_nodes == 1

    def test_verdict_needs_matching_witness(self):
        with pytest.raises(ValidationException):
            IsoVerdict(verdict=Verdict.ISOMORPHIC)


class TestDistinguishAll:
    def test_small_connected_graphs(self):
        graphs = connected_simple_graphs(4)
        report = distinguish_all(graphs, 4)
        assert len(report.pairs) == len(graphs) * (len(graphs) - 1) // 2
        assert report.count(Verdict.DISTINGUISHED) == len(report.pairs)
        assert report.undistinguished == ()

    def test_isomorphic_copies_are_matched(self, p3, centered_p3, k3):
        report = distinguish_all([p3, centered_p3, k3], 3)
        verdicts = {(pair.first, pair.second): pair.verdict.verdict for pair in report.pairs}
        assert verdicts[(0, 1)] is Verdict.ISOMORPHIC
        assert verdicts[(0, 2)] is Verdict.DISTINGUISHED

    def test_matches_networkx_isomorphism(self):
        nx_graphs = [
            nx.Graph([(0, 1), (1, 2), (2, 3)]),
            nx.Graph([(0, 2), (2, 1), (1, 3)]),
            nx.star_graph(3),
            nx.Graph([(0, 1), (1, 2), (2, 0), (2, 3)]),
        ]
        report = distinguish_all([from_networkx(g) for g in nx_graphs], 4)
        for pair in report.pairs:
            expected = nx.is_isomorphic(nx_graphs[pair.first], nx_graphs[pair.second])
            assert (pair.verdict.verdict is Verdict.ISOMORPHIC) == expected

    @pytest.mark.slow
    def test_five_node_atlas_is_fully_distinguished(self):
        atlas = [g for g in nx.graph_atlas_g() if g.number_of_nodes() == 5 and nx.is_connected(g)]
        graphs = connected_simple_graphs(5)[-len(atlas):]
        assert all(g.m == 5 for g in graphs)
        report = distinguish_all(graphs)
        assert report.count(Verdict.DISTINGUISHED) == len(report.pairs)


def test_iso_api(client):
    k3 = {"alpha": ["1"] * 3, "beta": [["0", "1", "1"], ["1", "0", "1"], ["1", "1", "0"]]}
    p3 = {"alpha": ["1"] * 3, "beta": [["0", "1", "0"], ["1", "0", "1"], ["0", "1", "0"]]}
    response = client.post("/api/iso", {"g1": k3, "g2": p3, "max_pattern_nodes": 3}, content_type="application/json")
    assert response.json()["data"]["verdict"] == "distinguished-by-pattern"


def test_complete_graph_profile_counts_edges():
    catalog = pattern_catalog(2)
    # 空图、单点、两个孤立点、一条边
    assert hom_profile(complete_graph(4), catalog) == [1, 4, 16, 12]
    assert hom_profile(path_graph(4), catalog)[-1] == 6
