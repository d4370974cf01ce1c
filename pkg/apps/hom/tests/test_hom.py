from fractions import Fraction
from itertools import product

import networkx as nx
import pytest

from apps.core.api.exceptions import ValidationException
from apps.graph.model import KLabeledGraph, QuantumGraph, WeightedGraph
from apps.graph.selectors import from_networkx
from apps.hom.selectors import iter_maps, map_count, map_index
from apps.hom.services import alpha_weight, hom, hom_partial, hom_quantum, hom_vector, normalize_weights


def brute_force_count(pattern: nx.Graph, target: nx.Graph) -> int:
    nodes = list(pattern.nodes())
    count = 0
    for images in product(list(target.nodes()), repeat=len(nodes)):
        f = dict(zip(nodes, images))
        if all(target.has_edge(f[u], f[v]) for u, v in pattern.edges()):
            count += 1
    return count


def as_pattern(graph: nx.Graph) -> KLabeledGraph:
    index = {v: i for i, v in enumerate(sorted(graph.nodes()))}
    return KLabeledGraph(k=0, n=len(index), edges=tuple((index[u], index[v]) for u, v in graph.edges()))


class TestHom:
    def test_edge_into_path(self, k2_pattern, p2):
        assert hom(k2_pattern, p2) == 2

    def test_edge_into_cycle(self, k2_pattern, c4):
        assert hom(k2_pattern, c4) == 8

    def test_single_labeled_node_sums_alpha(self):
        half = WeightedGraph.from_edges(2, [(0, 0), (1, 1)], alpha=["1/2", "1/2"])
        assert hom(KLabeledGraph.empty(1), half) == 1

    def test_empty_pattern_is_one(self, p3):
        assert hom(KLabeledGraph.empty(0), p3) == 1

    def test_weighted_edge(self, graphs, k2_pattern):
        assert hom(k2_pattern, graphs["p2_skewed"]) == Fraction(4, 9)

    def test_multiplicity_raises_weight(self, k2_pattern, graphs):
        double = KLabeledGraph(k=0, n=2, edges=((0, 1, 2),))
        # β(0,1) = 1/2，β(1,2) = 1
        assert hom(double, graphs["p3_half"]) == 2 * (Fraction(1, 4) + 1)
        assert hom(k2_pattern, graphs["p3_half"]) == 3

    def test_loop_weight(self, k2_pattern, graphs):
        # 自环权 2 计入 β(0,0)
        assert hom(k2_pattern, graphs["loop3"]) == 2 + 2 * 2

    @pytest.mark.parametrize("target", [nx.path_graph(3), nx.cycle_graph(4), nx.complete_graph(3)])
    def test_matches_brute_force(self, target):
        weighted = from_networkx(target)
        for pattern in nx.graph_atlas_g()[1:19]:
            assert hom(as_pattern(pattern), weighted) == brute_force_count(pattern, target)


class TestPartial:
    def test_edge_column_on_path(self, edge_1, p3):
        assert [hom_partial(edge_1, p3, (v,)) for v in p3.nodes] == [1, 2, 1]
        assert hom_vector(edge_1, p3) == (1, 2, 1)

    def test_labeled_nodes_carry_no_alpha(self, graphs):
        target = graphs["p2_skewed"]
        assert hom_partial(KLabeledGraph.empty(1), target, (0,)) == 1
        assert alpha_weight((0, 1), target) == Fraction(2, 9)

    def test_two_labels(self, p3):
        edge = KLabeledGraph.single_edge(2, 0, 1)
        assert hom_partial(edge, p3, (0, 1)) == 1
        assert hom_partial(edge, p3, (0, 2)) == 0

    def test_phi_length_mismatch(self, edge_1, p3):
        with pytest.raises(ValidationException):
            hom_partial(edge_1, p3, (0, 1))

    def test_phi_out_of_range(self, edge_1, p3):
        with pytest.raises(ValidationException):
            hom_partial(edge_1, p3, (3,))

    def test_sum_over_maps_with_alpha_is_hom(self, edge_1, graphs):
        target = graphs["p3_half"]
        total = sum(alpha_weight(phi, target) * hom_partial(edge_1, target, phi) for phi in iter_maps(target.m, 1))
        assert total == hom(edge_1, target)


def test_hom_quantum_is_linear(edge_1, p3):
    x = QuantumGraph.from_terms(1, {edge_1: 3, KLabeledGraph.empty(1): -1})
    assert hom_quantum(x, p3) == 3 * 4 - 3


def test_normalize_weights(graphs):
    normalized = normalize_weights(graphs["p3_half"])
    assert normalized.total_weight == 1
    assert normalized.beta == graphs["p3_half"].beta


def test_map_order_is_lexicographic():
    maps = list(iter_maps(3, 2))
    assert maps[:4] == [(0, 0), (0, 1), (0, 2), (1, 0)]
    assert len(maps) == map_count(3, 2)
    assert all(map_index(phi, 3) == i for i, phi in enumerate(maps))


def test_hom_api(client, p2):
    payload = {
        "pattern": {"k": 0, "n": 2, "edges": [[0, 1]]},
        "target": {"alpha": ["1", "1"], "beta": [["0", "1"], ["1", "0"]]},
    }
    response = client.post("/api/hom", payload, content_type="application/json")
    assert response.status_code == 200
    assert response.json()["data"] == {"value": "2"}


def test_hom_api_rejects_bad_phi(client):
    payload = {
        "pattern": {"k": 1, "n": 2, "edges": [[0, 1]]},
        "target": {"alpha": ["1", "1"], "beta": [["0", "1"], ["1", "0"]]},
        "phi": [0, 1],
    }
    response = client.post("/api/hom", payload, content_type="application/json")
    assert response.status_code == 400
    assert response.json()["code"] == "validation_error"
