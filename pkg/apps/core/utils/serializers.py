"""序列化辅助工具。"""
from __future__ import annotations

import dataclasses
import json
from fractions import Fraction
from typing import Any

from .rationals import format_rational


def to_jsonable(value: Any) -> Any:
    """将计算结果转换为可 JSON 序列化的结构，有理数输出为 "p/q"。"""
    if isinstance(value, Fraction):
        return format_rational(value)
    if hasattr(value, "model_dump"):
        return value.model_dump(mode="json")
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return {f.name: to_jsonable(getattr(value, f.name)) for f in dataclasses.fields(value)}
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (set, frozenset)):
        return [to_jsonable(v) for v in sorted(value)]
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    return value


def dumps(value: Any) -> str:
    """确定性 JSON：键排序、固定缩进。"""
    return json.dumps(to_jsonable(value), sort_keys=True, indent=2, ensure_ascii=False)


__all__ = ["to_jsonable", "dumps"]
