"""校验报告的 JSON 结构：{rank, orb, equal, bounds, escalations, ...}。"""
from __future__ import annotations

from typing import Any, Dict, List, Optional

from ninja import Schema
from pydantic import Field

from apps.core.utils.serializers import to_jsonable
from apps.graph.schemas import CatalogBoundsSchema, WeightedGraphSchema

from .model import CheckReport, SuiteReport


class CheckReportSchema(Schema):
    name: str
    status: str
    message: str = ""
    rank: Optional[int] = None
    orb: Optional[int] = None
    equal: Optional[bool] = None
    bounds: Optional[CatalogBoundsSchema] = None
    escalations: Optional[int] = None
    details: Dict[str, Any] = Field(default_factory=dict)

    @classmethod
    def from_domain(cls, report: CheckReport) -> "CheckReportSchema":
        return cls(
            name=report.name,
            status=report.status.value,
            message=report.message,
            rank=report.rank,
            orb=report.orb,
            equal=report.equal,
            bounds=CatalogBoundsSchema.from_domain(report.bounds) if report.bounds else None,
            escalations=report.escalations,
            details=to_jsonable(report.details),
        )


class SuiteReportSchema(Schema):
    k: int
    m: int
    status: str
    checks: List[CheckReportSchema]
    notices: List[str] = Field(default_factory=list)
    skipped: List[str] = Field(default_factory=list)
    twins: List[List[int]] = Field(default_factory=list)

    @classmethod
    def from_domain(cls, report: SuiteReport) -> "SuiteReportSchema":
        return cls(
            k=report.k,
            m=report.m,
            status=report.status.value,
            checks=[CheckReportSchema.from_domain(c) for c in report.checks],
            notices=list(report.notices),
            skipped=list(report.skipped),
            twins=[list(b) for b in report.twin_blocks],
        )


class TheoremRequestSchema(Schema):
    target: WeightedGraphSchema
    k: int = Field(..., ge=0)


class SuiteRequestSchema(Schema):
    target: WeightedGraphSchema
    k: int = Field(..., ge=0)
    strict: bool = False


__all__ = ["CheckReportSchema", "SuiteReportSchema", "TheoremRequestSchema", "SuiteRequestSchema"]
