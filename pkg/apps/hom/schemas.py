"""同态计数请求与结果。"""
from __future__ import annotations

from typing import List, Optional

from ninja import Schema

from apps.graph.schemas import KLabeledGraphSchema, WeightedGraphSchema


class HomRequestSchema(Schema):
    """phi 缺省时计算 hom(F, G)；给出时计算 hom_φ(F, G)。"""

    pattern: KLabeledGraphSchema
    target: WeightedGraphSchema
    phi: Optional[List[int]] = None


class HomResultSchema(Schema):
    value: str


__all__ = ["HomRequestSchema", "HomResultSchema"]
