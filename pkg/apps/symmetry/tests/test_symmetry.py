from fractions import Fraction

import networkx as nx
import pytest

from apps.core.api.exceptions import TwinsFoundException, ValidationException
from apps.graph.model import WeightedGraph
from apps.graph.selectors import connected_simple_graphs, cycle_graph, enumerate_k_labeled, from_networkx, simple_patterns
from apps.hom.services import hom
from apps.symmetry.model import NodePartition, Permutation, TuplePartition
from apps.symmetry.services import (
    automorphisms,
    ensure_twin_free,
    find_isomorphism,
    find_twins,
    is_isomorphism,
    is_twin_free,
    iter_isomorphisms,
    orbit_count,
    orbit_partition,
    quotient_hom_mismatches,
    reduce_twins,
    twin_quotient,
    verify_twin_free_rigidity,
)


class TestModel:
    def test_partition_is_normalized(self):
        assert NodePartition(blocks=((3, 1), (0, 2))).blocks == ((0, 2), (1, 3))

    def test_overlapping_blocks(self):
        with pytest.raises(ValidationException):
            NodePartition(blocks=((0, 1), (1, 2)))

    def test_permutation_algebra(self):
        sigma = Permutation((1, 2, 0))
        assert sigma.compose(sigma.inverse()).is_identity
        assert sigma.compose(sigma).images == (2, 0, 1)
        assert sigma.act((0, 0, 2)) == (1, 1, 0)
        with pytest.raises(ValidationException):
            Permutation((0, 0, 1))

    def test_tuple_partition_must_cover(self):
        with pytest.raises(ValidationException):
            TuplePartition(k=1, m=3, blocks=(((0,), (2,)),))
        partition = TuplePartition(k=1, m=3, blocks=(((2,), (0,)), ((1,),)))
        assert partition.same_block((0,), (2,))
        assert TuplePartition(k=1, m=3, blocks=(((0,),), ((1,),), ((2,),))).refines(partition)


class TestTwins:
    def test_cycle_twins(self, c4):
        assert find_twins(c4).blocks == ((0, 2), (1, 3))
        assert not is_twin_free(c4)

    def test_quotient_of_cycle(self, c4):
        quotient = twin_quotient(c4)
        assert quotient.alpha == (2, 2)
        assert quotient.beta == ((0, 1), (1, 0))

    def test_quotient_preserves_hom(self, c4, p3, k2_pattern):
        assert hom(k2_pattern, twin_quotient(c4)) == 8
        for graph in (c4, p3):
            assert quotient_hom_mismatches(graph, simple_patterns(4)) == []

    @pytest.mark.slow
    def test_quotient_preserves_hom_on_multigraph_catalog(self, c4):
        catalog = enumerate_k_labeled(0, 5, 6, 2)
        assert any(not pattern.is_simple for pattern in catalog)
        assert quotient_hom_mismatches(c4, catalog) == []

    def test_equal_weight_twins_swap_as_automorphism(self, c4):
        group = automorphisms(c4)
        assert Permutation.transposition(4, 0, 2) in group
        assert Permutation.transposition(4, 1, 3) in group

    def test_unequal_weight_twins_do_not_swap(self):
        graph = WeightedGraph.from_edges(3, [(0, 1), (1, 2)], alpha=[1, 5, "1/2"])
        assert find_twins(graph).blocks == ((0, 2), (1,))
        assert Permutation.transposition(3, 0, 2) not in automorphisms(graph)

    def test_twin_free_graph_is_its_own_quotient(self, k3):
        assert twin_quotient(k3) is k3

    def test_weights_do_not_split_twins(self):
        graph = WeightedGraph.from_edges(3, [(0, 1), (1, 2)], alpha=[1, 5, "1/2"])
        assert find_twins(graph).blocks == ((0, 2), (1,))
        assert twin_quotient(graph).alpha == (Fraction(3, 2), 5)

    def test_strict_policy(self, c4):
        with pytest.raises(TwinsFoundException) as excinfo:
            reduce_twins(c4, strict=True)
        assert excinfo.value.data == {"blocks": [[0, 2], [1, 3]]}
        assert excinfo.value.exit_code == 3

    def test_lenient_policy_returns_quotient(self, c4):
        reduced, partition = reduce_twins(c4)
        assert reduced.m == 2
        assert partition.nontrivial() == ((0, 2), (1, 3))

    def test_ensure_twin_free_passes(self, k3):
        assert ensure_twin_free(k3).is_discrete


class TestAutomorphisms:
    def test_asymmetric_graph(self, asym6):
        assert automorphisms(asym6) == [Permutation.identity(6)]

    @pytest.mark.parametrize("m, order", [(3, 6), (4, 8), (5, 10)])
    def test_cycle_dihedral_order(self, m, order):
        assert len(automorphisms(cycle_graph(m))) == order

    def test_identity_first(self, c4):
        assert automorphisms(c4)[0].is_identity

    def test_alpha_breaks_symmetry(self, graphs):
        assert len(automorphisms(graphs["p2_skewed"])) == 1

    def test_isomorphism_witness(self, p3):
        centered = WeightedGraph.from_edges(3, [(0, 1), (0, 2)])
        sigma = find_isomorphism(p3, centered)
        assert sigma is not None and is_isomorphism(sigma, p3, centered)
        assert sigma(1) == 0

    def test_no_isomorphism(self, p3, k3):
        assert find_isomorphism(p3, k3) is None
        assert list(iter_isomorphisms(p3, cycle_graph(4))) == []

    def test_pinned_search(self, c4):
        images = [sigma.images for sigma in iter_isomorphisms(c4, c4, pinned={0: 1})]
        assert len(images) == 2
        assert all(image[0] == 1 for image in images)

    def test_matches_networkx_on_atlas(self):
        for graph in connected_simple_graphs(5):
            expected = sum(1 for _ in nx.algorithms.isomorphism.GraphMatcher(to_nx(graph), to_nx(graph)).isomorphisms_iter())
            assert len(automorphisms(graph)) == expected


def to_nx(graph: WeightedGraph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(graph.nodes)
    g.add_edges_from((i, j) for i in graph.nodes for j in graph.nodes if i < j and graph.beta[i][j])
    return g


class TestOrbits:
    def test_path_orbits(self, p3):
        assert orbit_partition(p3, 1).blocks == (((0,), (2,)), ((1,),))
        assert orbit_count(p3, 2) == 5

    def test_k_zero_single_orbit(self, asym6):
        assert orbit_count(asym6, 0) == 1

    def test_asymmetric_graph_orbits_are_points(self, asym6):
        assert orbit_count(asym6, 1) == 6
        assert orbit_count(asym6, 2) == 36

    def test_orbit_count_from_networkx_graph(self):
        star = from_networkx(nx.star_graph(3))
        assert orbit_count(star, 1) == 2

    def test_orbits_api(self, client):
        payload = {
            "target": {"alpha": ["1", "1", "1"], "beta": [["0", "1", "0"], ["1", "0", "1"], ["0", "1", "0"]]},
            "k": 2,
        }
        response = client.post("/api/orbits", payload, content_type="application/json")
        assert response.json()["data"]["orbits"] == 5


class TestRigidity:
    @pytest.mark.parametrize("name", ["p2", "k3"])
    def test_twin_free_self_maps_are_bijective(self, graphs, name):
        assert verify_twin_free_rigidity(graphs[name])

    def test_rigidity_on_asymmetric_graph(self, asym6):
        assert verify_twin_free_rigidity(asym6)

    def test_rejects_twins(self, c4):
        with pytest.raises(TwinsFoundException):
            verify_twin_free_rigidity(c4)

    def test_size_limit(self, settings, k3):
        settings.GHA_RIGIDITY_MAX_NODES = 2
        with pytest.raises(ValidationException):
            verify_twin_free_rigidity(k3)


def test_twins_api(client):
    payload = {"target": {"alpha": ["1"] * 4, "beta": [["0", "1", "0", "1"], ["1", "0", "1", "0"]] * 2}}
    response = client.post("/api/twins", payload, content_type="application/json")
    assert response.json()["data"] == {"blocks": [[0, 2], [1, 3]], "twin_free": False}
