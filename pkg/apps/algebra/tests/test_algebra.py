from fractions import Fraction

import pytest

from apps.algebra.model import AlgebraVector, CheckStatus, combine_status
from apps.algebra.services import (
    algebra_product,
    equivalence_partition,
    f_k,
    f_k_quantum,
    idempotent_basis,
    idempotent_violations,
    inner_product_A,
    inner_product_G,
    quotient_dimension,
    trace_A,
)
from apps.core.api.exceptions import ValidationException
from apps.graph.model import CatalogBounds, KLabeledGraph, QuantumGraph
from apps.graph.selectors import catalog_for, enumerate_k_labeled
from apps.graph.services import extend_with_isolated_label, glue, trace_graph
from apps.hom.services import hom
from apps.symmetry.services import orbit_partition


@pytest.fixture
def catalog_1():
    return catalog_for(1, CatalogBounds(3, 2, 2))


class TestAlgebraVector:
    def test_unit_and_basis(self):
        assert AlgebraVector.unit(2, 2).values == (1, 1, 1, 1)
        assert AlgebraVector.basis(2, 3, (1, 2)).at((1, 2)) == 1
        assert AlgebraVector.basis(2, 3, (1, 2)).values.index(1) == 5

    def test_length_checked(self):
        with pytest.raises(ValidationException):
            AlgebraVector(k=2, m=2, values=(1, 2, 3))

    def test_arithmetic(self):
        x = AlgebraVector(1, 2, (1, "1/2"))
        assert (x - x).is_zero
        assert x.scale(2).values == (2, 1)


class TestHomomorphism:
    def test_f_of_edge_on_path(self, edge_1, p3):
        assert f_k(edge_1, p3).values == (1, 2, 1)

    def test_gluing_maps_to_pointwise_product(self, catalog_1, p3):
        for f1 in catalog_1:
            for f2 in catalog_1:
                assert f_k(glue(f1, f2), p3) == algebra_product(f_k(f1, p3), f_k(f2, p3))

    def test_unit_maps_to_unit(self, graphs):
        target = graphs["p3_half"]
        assert f_k(KLabeledGraph.empty(2), target) == AlgebraVector.unit(2, target.m)

    def test_quantum_linearity(self, edge_1, p3):
        x = QuantumGraph.from_terms(1, {edge_1: 2, KLabeledGraph.empty(1): -1})
        assert f_k_quantum(x, p3).values == (1, 3, 1)

    @pytest.mark.parametrize("name", ["p2_skewed", "p3_half", "loop3"])
    def test_inner_products_agree(self, graphs, catalog_1, name):
        target = graphs[name]
        for f1 in catalog_1.graphs[:8]:
            for f2 in catalog_1.graphs[:8]:
                assert inner_product_G(f1, f2, target) == inner_product_A(f_k(f1, target), f_k(f2, target), target)

    def test_inner_product_of_edge(self, edge_1, p3):
        assert inner_product_G(edge_1, edge_1, p3) == 6


class TestTrace:
    def test_trace_of_edge(self, edge_1, p3):
        traced = trace_A(f_k(edge_1, p3), p3)
        assert traced.k == 0 and traced.values == (4,)
        assert traced == f_k(trace_graph(edge_1), p3)

    @pytest.mark.parametrize("name", ["p3", "p3_half", "loop3"])
    def test_trace_commutes_with_f(self, graphs, name):
        target = graphs[name]
        for pattern in catalog_for(2, CatalogBounds(3, 2, 2)):
            assert trace_A(f_k(pattern, target), target) == f_k(trace_graph(pattern), target)

    def test_extension_then_trace_keeps_hom(self, edge_1, graphs):
        target = graphs["p2_skewed"]
        # 迹掉新增的孤立标号只多出一个孤立节点，其 α 之和为 1
        assert hom(trace_graph(extend_with_isolated_label(edge_1)), target) == hom(edge_1, target) * target.total_weight

    def test_zero_order_has_no_trace(self, p3):
        with pytest.raises(ValidationException):
            trace_A(AlgebraVector.unit(0, p3.m), p3)


class TestIdempotents:
    def test_partition_matches_orbits_on_path(self, p3):
        partition = equivalence_partition(1, p3, enumerate_k_labeled(1, 2, 1, 1))
        assert partition == orbit_partition(p3, 1)

    def test_basis_identities(self, p3):
        basis = idempotent_basis(1, p3, enumerate_k_labeled(1, 2, 1, 1))
        assert len(basis) == 2
        assert idempotent_violations(basis) == []

    def test_violations_are_reported(self):
        broken = [AlgebraVector(1, 2, (1, 1)), AlgebraVector(1, 2, (0, 1))]
        assert "w_0·w_1" in idempotent_violations(broken)

    def test_quotient_dimension_equals_rank(self, p3, catalog_1):
        assert quotient_dimension(1, p3, catalog_1) == 2


def test_combine_status():
    assert combine_status([CheckStatus.PASS, CheckStatus.INCONCLUSIVE]) is CheckStatus.INCONCLUSIVE
    assert combine_status([CheckStatus.INCONCLUSIVE, CheckStatus.FAIL]) is CheckStatus.FAIL
    assert combine_status([]) is CheckStatus.PASS
