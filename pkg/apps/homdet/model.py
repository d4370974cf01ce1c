"""同构判定结果。"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional, Tuple

from apps.core.api.exceptions import ValidationException
from apps.graph.model import CatalogBounds, KLabeledGraph
from apps.symmetry.model import Permutation


class Verdict(str, Enum):
    ISOMORPHIC = "isomorphic-with-witness"
    DISTINGUISHED = "distinguished-by-pattern"
    INCONCLUSIVE = "inconclusive-at-bounds"


@dataclass(frozen=True)
class IsoVerdict:
    """witness 的类型与 verdict 对应：置换、区分模式或所用上界。"""

    verdict: Verdict
    permutation: Optional[Permutation] = None
    pattern: Optional[KLabeledGraph] = None
    values: Optional[Tuple[Fraction, Fraction]] = None
    bounds: Optional[CatalogBounds] = None

    def __post_init__(self):
        expected = {
            Verdict.ISOMORPHIC: self.permutation is not None,
            Verdict.DISTINGUISHED: self.pattern is not None and self.values is not None,
            Verdict.INCONCLUSIVE: self.bounds is not None,
        }
        if not expected[self.verdict]:
            raise ValidationException(f"判定 {self.verdict.value} 缺少对应的见证")

    @property
    def witness(self):
        if self.verdict is Verdict.ISOMORPHIC:
            return self.permutation
        if self.verdict is Verdict.DISTINGUISHED:
            return self.pattern
        return self.bounds


@dataclass(frozen=True)
class GadgetReport:
    """构件两个顶点上 hom 值的逐模式比较。"""

    patterns: int
    mismatches: Tuple[KLabeledGraph, ...] = ()
    decomposition_mismatches: Tuple[KLabeledGraph, ...] = ()
    gadget_twin_free: bool = True

    @property
    def holds(self) -> bool:
        return not self.mismatches and not self.decomposition_mismatches


@dataclass(frozen=True)
class PairVerdict:
    first: int
    second: int
    verdict: IsoVerdict
    pattern_nodes: int


@dataclass(frozen=True)
class DistinguishReport:
    pairs: Tuple[PairVerdict, ...] = field(default_factory=tuple)

    def count(self, verdict: Verdict) -> int:
        return sum(1 for p in self.pairs if p.verdict.verdict is verdict)

    @property
    def undistinguished(self) -> Tuple[PairVerdict, ...]:
        return tuple(p for p in self.pairs if p.verdict.verdict is Verdict.INCONCLUSIVE)


__all__ = ["Verdict", "IsoVerdict", "GadgetReport", "PairVerdict", "DistinguishReport"]
