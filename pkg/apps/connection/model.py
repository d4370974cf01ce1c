"""稠密精确有理矩阵。"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence, Tuple

from apps.core.api.exceptions import ValidationException
from apps.core.utils.rationals import RationalLike, parse_rational


@dataclass(frozen=True)
class RationalMatrix:
    """rows × cols 的有理矩阵；row_labels / col_labels 为可选的行列索引元数据。"""

    rows: int
    cols: int
    entries: Tuple[Tuple[Fraction, ...], ...]
    row_labels: Tuple[Any, ...] = ()
    col_labels: Tuple[Any, ...] = ()

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValidationException("矩阵维数不能为负")
        if len(self.entries) != self.rows:
            raise ValidationException(f"矩阵应有 {self.rows} 行，实际 {len(self.entries)} 行")
        grid = []
        for i, row in enumerate(self.entries):
            if len(row) != self.cols:
                raise ValidationException(f"第 {i} 行长度应为 {self.cols}")
            grid.append(tuple(parse_rational(v, field=f"entries[{i}]") for v in row))
        if self.row_labels and len(self.row_labels) != self.rows:
            raise ValidationException("行标签数量与行数不一致")
        if self.col_labels and len(self.col_labels) != self.cols:
            raise ValidationException("列标签数量与列数不一致")
        object.__setattr__(self, "entries", tuple(grid))
        object.__setattr__(self, "row_labels", tuple(self.row_labels))
        object.__setattr__(self, "col_labels", tuple(self.col_labels))

    # ---- 构造 ----
    @classmethod
    def from_rows(
        cls,
        rows: Sequence[Sequence[RationalLike]],
        *,
        cols: int | None = None,
        row_labels: Sequence[Any] = (),
        col_labels: Sequence[Any] = (),
    ) -> "RationalMatrix":
        width = cols if cols is not None else (len(rows[0]) if rows else 0)
        return cls(
            rows=len(rows),
            cols=width,
            entries=tuple(tuple(r) for r in rows),
            row_labels=tuple(row_labels),
            col_labels=tuple(col_labels),
        )

    @classmethod
    def from_columns(
        cls,
        columns: Sequence[Sequence[RationalLike]],
        *,
        rows: int,
        row_labels: Sequence[Any] = (),
        col_labels: Sequence[Any] = (),
    ) -> "RationalMatrix":
        for j, column in enumerate(columns):
            if len(column) != rows:
                raise ValidationException(f"第 {j} 列长度应为 {rows}")
        grid = tuple(tuple(column[i] for column in columns) for i in range(rows))
        return cls(rows=rows, cols=len(columns), entries=grid, row_labels=tuple(row_labels), col_labels=tuple(col_labels))

    @classmethod
    def diagonal(cls, values: Sequence[RationalLike], labels: Sequence[Any] = ()) -> "RationalMatrix":
        n = len(values)
        grid = tuple(tuple(values[i] if i == j else 0 for j in range(n)) for i in range(n))
        return cls(rows=n, cols=n, entries=grid, row_labels=tuple(labels), col_labels=tuple(labels))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls.diagonal([1] * n)

    # ---- 访问 ----
    def row(self, i: int) -> Tuple[Fraction, ...]:
        return self.entries[i]

    def column(self, j: int) -> Tuple[Fraction, ...]:
        return tuple(row[j] for row in self.entries)

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self.entries[i][j] == self.entries[j][i] for i in range(self.rows) for j in range(i + 1, self.cols)
        )

    # ---- 运算 ----
    def transpose(self) -> "RationalMatrix":
        grid = tuple(self.column(j) for j in range(self.cols))
        return RationalMatrix(
            rows=self.cols,
            cols=self.rows,
            entries=grid,
            row_labels=self.col_labels,
            col_labels=self.row_labels,
        )

    @property
    def T(self) -> "RationalMatrix":
        return self.transpose()

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValidationException(f"矩阵维数不匹配：{self.shape} @ {other.shape}")
        columns = [other.column(j) for j in range(other.cols)]
        grid = tuple(
            tuple(sum((a * b for a, b in zip(row, column) if a and b), Fraction(0)) for column in columns)
            for row in self.entries
        )
        return RationalMatrix(
            rows=self.rows,
            cols=other.cols,
            entries=grid,
            row_labels=self.row_labels,
            col_labels=other.col_labels,
        )

    def same_entries(self, other: "RationalMatrix") -> bool:
        """逐项精确比较，忽略行列标签。"""
        return self.shape == other.shape and self.entries == other.entries


__all__ = ["RationalMatrix"]
