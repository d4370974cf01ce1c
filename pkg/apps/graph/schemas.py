"""图文件格式与目录输出 Schemas。"""
from __future__ import annotations

from typing import List, Union

from ninja import Schema
from pydantic import Field, field_validator

from apps.core.utils.rationals import format_rational

from .model import CatalogBounds, GraphCatalog, KLabeledGraph, WeightedGraph

RationalText = Union[str, int]


class WeightedGraphSchema(Schema):
    """{"alpha": ["p/q", ...], "beta": [["p/q", ...], ...]}，beta 为完整对称矩阵。"""

    alpha: List[RationalText]
    beta: List[List[RationalText]]

    @field_validator("alpha")
    @classmethod
    def alpha_not_empty(cls, v):
        if not v:
            raise ValueError("alpha 不能为空")
        return v

    def to_domain(self) -> WeightedGraph:
        return WeightedGraph(alpha=tuple(self.alpha), beta=tuple(tuple(row) for row in self.beta))

    @classmethod
    def from_domain(cls, graph: WeightedGraph) -> "WeightedGraphSchema":
        return cls(
            alpha=[format_rational(a) for a in graph.alpha],
            beta=[[format_rational(b) for b in row] for row in graph.beta],
        )


class KLabeledGraphSchema(Schema):
    """{"k": int, "n": int, "edges": [[u, v, mult], ...]}，节点 0..k-1 依标号顺序带标号。"""

    k: int = Field(..., ge=0)
    n: int = Field(..., ge=0)
    edges: List[List[int]] = Field(default_factory=list)

    @field_validator("edges")
    @classmethod
    def edge_shape(cls, v):
        for edge in v:
            if len(edge) not in (2, 3):
                raise ValueError(f"边必须是 [u, v] 或 [u, v, mult]：{edge}")
        return v

    def to_domain(self) -> KLabeledGraph:
        return KLabeledGraph(k=self.k, n=self.n, edges=tuple(tuple(e) for e in self.edges))

    @classmethod
    def from_domain(cls, graph: KLabeledGraph) -> "KLabeledGraphSchema":
        return cls(k=graph.k, n=graph.n, edges=[list(e) for e in graph.edges])


class CatalogBoundsSchema(Schema):
    max_nodes: int = Field(..., ge=0)
    max_total_edges: int = Field(..., ge=0)
    max_multiplicity: int = Field(2, ge=1)

    def to_domain(self) -> CatalogBounds:
        return CatalogBounds(self.max_nodes, self.max_total_edges, self.max_multiplicity)

    @classmethod
    def from_domain(cls, bounds: CatalogBounds) -> "CatalogBoundsSchema":
        return cls(
            max_nodes=bounds.max_nodes,
            max_total_edges=bounds.max_total_edges,
            max_multiplicity=bounds.max_multiplicity,
        )


class GraphCatalogSchema(Schema):
    k: int
    bounds: CatalogBoundsSchema
    count: int
    graphs: List[KLabeledGraphSchema]

    @classmethod
    def from_domain(cls, catalog: GraphCatalog) -> "GraphCatalogSchema":
        return cls(
            k=catalog.k,
            bounds=CatalogBoundsSchema.from_domain(catalog.bounds),
            count=len(catalog),
            graphs=[KLabeledGraphSchema.from_domain(g) for g in catalog],
        )


__all__ = [
    "RationalText",
    "WeightedGraphSchema",
    "KLabeledGraphSchema",
    "CatalogBoundsSchema",
    "GraphCatalogSchema",
]
