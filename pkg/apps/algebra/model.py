"""𝒜ₖ 中的向量与校验报告。"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from apps.core.api.exceptions import ValidationException
from apps.core.utils.rationals import RationalLike, parse_rational
from apps.graph.model import CatalogBounds
from apps.hom.selectors import map_index


@dataclass(frozen=True)
class AlgebraVector:
    """按字典序排列的 m^k 个映射上的有理向量。"""

    k: int
    m: int
    values: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.k < 0 or self.m < 1:
            raise ValidationException("AlgebraVector 需要 k ≥ 0 且 m ≥ 1")
        values = tuple(parse_rational(v, field="values") for v in self.values)
        if len(values) != self.m**self.k:
            raise ValidationException(f"向量长度应为 {self.m ** self.k}，实际为 {len(values)}")
        object.__setattr__(self, "values", values)

    @classmethod
    def unit(cls, k: int, m: int) -> "AlgebraVector":
        """u_k = Σ_φ φ。"""
        return cls(k=k, m=m, values=(Fraction(1),) * (m**k))

    @classmethod
    def zero(cls, k: int, m: int) -> "AlgebraVector":
        return cls(k=k, m=m, values=(Fraction(0),) * (m**k))

    @classmethod
    def indicator(cls, k: int, m: int, maps: Iterable[Sequence[int]]) -> "AlgebraVector":
        values = [Fraction(0)] * (m**k)
        for phi in maps:
            values[map_index(tuple(phi), m)] = Fraction(1)
        return cls(k=k, m=m, values=tuple(values))

    @classmethod
    def basis(cls, k: int, m: int, phi: Sequence[int]) -> "AlgebraVector":
        return cls.indicator(k, m, [phi])

    def at(self, phi: Sequence[int]) -> Fraction:
        return self.values[map_index(tuple(phi), self.m)]

    @property
    def is_zero(self) -> bool:
        return not any(self.values)

    def _check(self, other: "AlgebraVector") -> None:
        if (self.k, self.m) != (other.k, other.m):
            raise ValidationException(f"向量维数不一致：(k={self.k}, m={self.m}) vs (k={other.k}, m={other.m})")

    def __add__(self, other: "AlgebraVector") -> "AlgebraVector":
        self._check(other)
        return AlgebraVector(self.k, self.m, tuple(a + b for a, b in zip(self.values, other.values)))

    def scale(self, coeff: RationalLike) -> "AlgebraVector":
        c = parse_rational(coeff)
        return AlgebraVector(self.k, self.m, tuple(c * v for v in self.values))

    def __neg__(self) -> "AlgebraVector":
        return self.scale(-1)

    def __sub__(self, other: "AlgebraVector") -> "AlgebraVector":
        return self + (-other)


class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"


def combine_status(statuses: Iterable[CheckStatus]) -> CheckStatus:
    """任一失败即失败；否则任一不确定即不确定。"""
    statuses = list(statuses)
    if CheckStatus.FAIL in statuses:
        return CheckStatus.FAIL
    if CheckStatus.INCONCLUSIVE in statuses:
        return CheckStatus.INCONCLUSIVE
    return CheckStatus.PASS


@dataclass(frozen=True)
class CheckReport:
    name: str
    status: CheckStatus
    message: str = ""
    rank: Optional[int] = None
    orb: Optional[int] = None
    equal: Optional[bool] = None
    bounds: Optional[CatalogBounds] = None
    escalations: Optional[int] = None
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status is CheckStatus.PASS


@dataclass(frozen=True)
class SuiteReport:
    k: int
    m: int
    checks: Tuple[CheckReport, ...]
    notices: Tuple[str, ...] = ()
    skipped: Tuple[str, ...] = ()
    twin_blocks: Tuple[Tuple[int, ...], ...] = ()

    @property
    def status(self) -> CheckStatus:
        return combine_status(check.status for check in self.checks)

    def by_name(self) -> Dict[str, CheckReport]:
        return {check.name: check for check in self.checks}

    def names(self) -> List[str]:
        return [check.name for check in self.checks]


__all__ = ["AlgebraVector", "CheckStatus", "combine_status", "CheckReport", "SuiteReport"]
