"""映射 φ: [1,k] → V(G)。"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from apps.core.api.exceptions import ValidationException


@dataclass(frozen=True)
class MapAssignment:
    """targets[i] 是标号 i+1 的像（0 起始节点编号）。"""

    targets: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "targets", tuple(int(t) for t in self.targets))

    @property
    def k(self) -> int:
        return len(self.targets)

    def check(self, m: int) -> "MapAssignment":
        for i, t in enumerate(self.targets):
            if not 0 <= t < m:
                raise ValidationException(f"φ({i + 1}) = {t} 超出节点范围 [0, {m})")
        return self


__all__ = ["MapAssignment"]
