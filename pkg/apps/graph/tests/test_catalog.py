from fractions import Fraction

import networkx as nx
import pytest

from apps.core.api.exceptions import ValidationException
from apps.graph.model import CatalogBounds, KLabeledGraph, QuantumGraph, WeightedGraph
from apps.graph.selectors import (
    connected_simple_graphs,
    enumerate_k_labeled,
    escalation_ladder,
    from_networkx,
    path_graph,
    simple_patterns,
    sized_catalog,
)
from apps.graph.services import (
    canonical_form,
    escalate,
    extend_with_isolated_label,
    glue,
    is_connected,
    is_isomorphic_labeled,
    quantum_product,
    seed_weighted_graph,
    trace_graph,
)


class TestWeightedGraph:
    def test_rejects_asymmetric_beta(self):
        with pytest.raises(ValidationException):
            WeightedGraph(alpha=(1, 1), beta=((0, 1), (2, 0)))

    def test_rejects_non_positive_alpha(self):
        with pytest.raises(ValidationException):
            WeightedGraph(alpha=(1, 0), beta=((0, 1), (1, 0)))

    def test_from_edges_parses_rationals(self):
        g = WeightedGraph.from_edges(2, [(0, 1, "1/2"), (1, 1, 2)], alpha=["1/3", "2/3"])
        assert g.beta == ((0, Fraction(1, 2)), (Fraction(1, 2), 2))
        assert g.total_weight == 1


class TestKLabeledGraph:
    def test_edges_are_merged_and_sorted(self):
        g = KLabeledGraph(k=1, n=3, edges=((2, 0), (0, 2), (1, 0, 2)))
        assert g.edges == ((0, 1, 2), (0, 2, 2))
        assert g.total_edges == 4

    def test_rejects_loops(self):
        with pytest.raises(ValidationException):
            KLabeledGraph(k=0, n=1, edges=((0, 0),))

    def test_constructors(self):
        assert KLabeledGraph.complete(3).edges == ((0, 1, 1), (0, 2, 1), (1, 2, 1))
        assert KLabeledGraph.single_edge(3, 0, 2).edges == ((0, 2, 1),)
        assert KLabeledGraph.empty(2, 4).n == 4


class TestEnumeration:
    def test_one_label_two_nodes_simple(self):
        catalog = enumerate_k_labeled(1, 2, 1, 1)
        assert len(catalog) == 3
        assert catalog[0] == KLabeledGraph.empty(1)
        assert catalog[1] == KLabeledGraph.empty(1, 2)
        assert catalog[2] == KLabeledGraph(k=1, n=2, edges=((0, 1, 1),))

    def test_unlabeled_tiny(self):
        catalog = enumerate_k_labeled(0, 1, 0, 1)
        assert [g.n for g in catalog] == [0, 1]

    def test_contains_empty_labeled_graph(self):
        assert KLabeledGraph.empty(2) in enumerate_k_labeled(2, 2, 0, 1).graphs

    def test_size_monotone_in_bounds(self):
        base = len(enumerate_k_labeled(1, 3, 2, 1))
        assert len(enumerate_k_labeled(1, 4, 2, 1)) >= base
        assert len(enumerate_k_labeled(1, 3, 3, 1)) >= base
        assert len(enumerate_k_labeled(1, 3, 2, 2)) >= base

    def test_entries_are_canonical_and_sorted(self):
        catalog = enumerate_k_labeled(1, 3, 3, 2)
        assert all(canonical_form(g) == g for g in catalog)
        assert [g.sort_key for g in catalog] == sorted(g.sort_key for g in catalog)

    def test_max_nodes_below_k(self):
        with pytest.raises(ValidationException):
            enumerate_k_labeled(3, 2, 1)

    def test_simple_patterns_match_atlas_count(self):
        # 至多 4 个节点的简单图（含空图）
        atlas = sum(1 for g in nx.graph_atlas_g() if g.number_of_nodes() <= 4)
        assert len(simple_patterns(4)) == atlas

    def test_sized_catalog_prefix(self):
        catalog = sized_catalog(1, 10)
        assert len(catalog) == 10
        full = enumerate_k_labeled(1, catalog.max_nodes, catalog.max_total_edges, catalog.max_multiplicity)
        assert catalog.graphs == full.graphs[:10]


class TestGluing:
    def test_glue_adds_multiplicities(self):
        edge = KLabeledGraph.single_edge(2, 0, 1)
        assert glue(edge, edge) == KLabeledGraph(k=2, n=2, edges=((0, 1, 2),))

    def test_glue_keeps_unlabeled_nodes_apart(self, edge_1):
        star = glue(edge_1, edge_1)
        assert (star.n, star.edges) == (3, ((0, 1, 1), (0, 2, 1)))

    def test_glue_k_mismatch(self, edge_1):
        with pytest.raises(ValidationException):
            glue(edge_1, KLabeledGraph.empty(2))

    def test_canonical_form_identifies_relabelings(self):
        a = KLabeledGraph(k=1, n=3, edges=((0, 1), (1, 2)))
        b = KLabeledGraph(k=1, n=3, edges=((0, 2), (2, 1)))
        assert is_isomorphic_labeled(a, b)
        assert not is_isomorphic_labeled(a, KLabeledGraph(k=1, n=3, edges=((0, 1), (0, 2))))

    def test_trace_and_extension(self, edge_1):
        assert trace_graph(edge_1) == KLabeledGraph(k=0, n=2, edges=((0, 1, 1),))
        extended = extend_with_isolated_label(edge_1)
        assert (extended.k, extended.n, extended.edges) == (2, 3, ((0, 2, 1),))
        with pytest.raises(ValidationException):
            trace_graph(KLabeledGraph.empty(0))

    def test_is_connected(self):
        assert is_connected(KLabeledGraph(k=0, n=3, edges=((0, 1), (1, 2))))
        assert not is_connected(KLabeledGraph.empty(0, 2))

    def test_quantum_product_is_bilinear(self, edge_1):
        x = QuantumGraph.from_terms(1, {edge_1: 2, KLabeledGraph.empty(1): 1})
        square = quantum_product(x, x)
        assert square.as_dict()[canonical_form(glue(edge_1, edge_1))] == 4
        assert square.as_dict()[canonical_form(edge_1)] == 4
        assert (x - x).is_zero


class TestLadder:
    def test_alternates_edges_then_nodes(self):
        rungs = escalation_ladder(CatalogBounds(1, 2, 2), CatalogBounds(3, 4, 2))
        assert [(b.max_nodes, b.max_total_edges) for b in rungs] == [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]

    def test_escalate_stops_on_target(self):
        ladder = escalation_ladder(CatalogBounds(1, 0, 1), CatalogBounds(2, 2, 1))
        result = escalate(1, ladder, len, target=1)
        assert result.certified and result.escalations == 0

    def test_escalate_stabilizes_after_patience(self):
        ladder = escalation_ladder(CatalogBounds(1, 0, 1), CatalogBounds(4, 4, 1))
        result = escalate(1, ladder, lambda catalog: 7)
        assert result.stabilized and not result.certified
        assert result.escalations == 2

    def test_escalate_reaches_ceiling(self):
        ladder = escalation_ladder(CatalogBounds(1, 0, 1), CatalogBounds(2, 1, 1))
        result = escalate(1, ladder, len)
        assert result.reached_ceiling
        assert result.bounds == ladder[-1]

    def test_empty_ladder(self):
        with pytest.raises(ValidationException):
            escalate(1, [], len)


class TestCorpus:
    def test_from_networkx_matches_path(self):
        assert from_networkx(nx.path_graph(3)) == path_graph(3)

    def test_connected_simple_graphs(self):
        assert len(connected_simple_graphs(3)) == 4

    def test_seeded_targets_are_reproducible(self):
        assert seed_weighted_graph(4, seed=7) == seed_weighted_graph(4, seed=7)
        assert all(a > 0 for a in seed_weighted_graph(4, seed=7).alpha)


def test_catalog_api(client):
    response = client.get("/api/catalog", {"k": 1, "max_nodes": 2, "max_edges": 1, "max_mult": 1})
    assert response.status_code == 200
    assert len(response.json()["data"]["graphs"]) == 3
