"""同构判定的传输结构。"""
from __future__ import annotations

from typing import List, Optional

from ninja import Schema
from pydantic import Field

from apps.core.utils.rationals import format_rational
from apps.graph.schemas import CatalogBoundsSchema, KLabeledGraphSchema, WeightedGraphSchema

from .model import IsoVerdict


class IsoVerdictSchema(Schema):
    """verdict 与对应见证：permutation（images 列表）、pattern（附两侧 hom 值）或 bounds。"""

    verdict: str
    permutation: Optional[List[int]] = None
    pattern: Optional[KLabeledGraphSchema] = None
    values: Optional[List[str]] = None
    bounds: Optional[CatalogBoundsSchema] = None

    @classmethod
    def from_domain(cls, verdict: IsoVerdict) -> "IsoVerdictSchema":
        return cls(
            verdict=verdict.verdict.value,
            permutation=list(verdict.permutation.images) if verdict.permutation else None,
            pattern=KLabeledGraphSchema.from_domain(verdict.pattern) if verdict.pattern else None,
            values=[format_rational(v) for v in verdict.values] if verdict.values else None,
            bounds=CatalogBoundsSchema.from_domain(verdict.bounds) if verdict.bounds else None,
        )


class IsoRequestSchema(Schema):
    g1: WeightedGraphSchema
    g2: WeightedGraphSchema
    max_pattern_nodes: int = Field(5, ge=0, le=7)


__all__ = ["IsoVerdictSchema", "IsoRequestSchema"]
