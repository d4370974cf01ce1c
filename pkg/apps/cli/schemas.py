"""命令运行配置。"""
from __future__ import annotations

from enum import Enum
from typing import Any, Dict, List, Literal, Mapping, Optional, Sequence

from django.conf import settings
from ninja import Schema
from pydantic import Field, ValidationError

from apps.core.api.exceptions import ValidationException
from apps.graph.model import CatalogBounds
from apps.graph.selectors import default_bounds, escalation_ladder, start_bounds

Verb = Literal["hom", "rank", "orbits", "twins", "quotient", "verify", "iso", "enumerate", "seedgraph"]


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    TEXT = "text"


class RunConfig(Schema):
    """由命令选项与设置合成；未给出的上界取 GHA_* 默认值。"""

    command: Verb
    inputs: List[str] = Field(default_factory=list)
    k: int = Field(0, ge=0)
    max_nodes: Optional[int] = Field(None, ge=0)
    max_total_edges: Optional[int] = Field(None, ge=0)
    max_multiplicity: Optional[int] = Field(None, ge=1)
    format: OutputFormat = OutputFormat.JSON
    jobs: Optional[int] = Field(None, ge=1)
    strict: bool = False

    @classmethod
    def from_options(cls, command: str, options: Mapping[str, Any], inputs: Sequence[str] = ()) -> "RunConfig":
        data: Dict[str, Any] = {
            "command": command,
            "inputs": list(inputs),
            "k": options.get("k") or 0,
            "max_nodes": options.get("max_nodes"),
            "max_total_edges": options.get("max_edges"),
            "max_multiplicity": options.get("max_mult"),
            "jobs": options.get("jobs"),
            "strict": bool(options.get("strict")),
        }
        if options.get("format"):
            data["format"] = options["format"]
        try:
            return cls(**data)
        except ValidationError as exc:
            first = exc.errors()[0]
            location = ".".join(str(part) for part in first.get("loc", ()))
            raise ValidationException(f"参数 {location} 无效：{first.get('msg')}")

    def bounds(self) -> CatalogBounds:
        base = default_bounds(self.k)
        return CatalogBounds(
            max_nodes=base.max_nodes if self.max_nodes is None else self.max_nodes,
            max_total_edges=base.max_total_edges if self.max_total_edges is None else self.max_total_edges,
            max_multiplicity=base.max_multiplicity if self.max_multiplicity is None else self.max_multiplicity,
        )

    def ceiling(self, level: Optional[int] = None) -> CatalogBounds:
        """升级上限；--max-nodes 按与 k 的差值平移到其他标号数。"""
        level = self.k if level is None else level
        offset = settings.GHA_CEILING_MAX_NODES_OFFSET if self.max_nodes is None else self.max_nodes - self.k
        return CatalogBounds(
            max_nodes=max(level, level + offset),
            max_total_edges=settings.GHA_CEILING_MAX_TOTAL_EDGES if self.max_total_edges is None else self.max_total_edges,
            max_multiplicity=settings.GHA_DEFAULT_MAX_MULTIPLICITY if self.max_multiplicity is None else self.max_multiplicity,
        )

    def ladder(self, level: Optional[int] = None) -> List[CatalogBounds]:
        level = self.k if level is None else level
        return escalation_ladder(start_bounds(level), self.ceiling(level))


__all__ = ["Verb", "OutputFormat", "RunConfig"]
