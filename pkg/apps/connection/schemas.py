"""矩阵与秩的传输结构。"""
from __future__ import annotations

from typing import List, Optional

from ninja import Schema
from pydantic import Field

from apps.core.utils.rationals import format_rational
from apps.graph.schemas import CatalogBoundsSchema, WeightedGraphSchema

from .model import RationalMatrix


class MatrixSchema(Schema):
    rows: int
    cols: int
    entries: List[List[str]]

    @classmethod
    def from_domain(cls, matrix: RationalMatrix) -> "MatrixSchema":
        return cls(
            rows=matrix.rows,
            cols=matrix.cols,
            entries=[[format_rational(v) for v in row] for row in matrix.entries],
        )


class RankRequestSchema(Schema):
    target: WeightedGraphSchema
    k: int = Field(..., ge=0)
    bounds: Optional[CatalogBoundsSchema] = None


class RankResultSchema(Schema):
    rank: int
    catalog_size: int
    bounds: CatalogBoundsSchema


__all__ = ["MatrixSchema", "RankRequestSchema", "RankResultSchema"]
