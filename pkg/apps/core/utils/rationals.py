"""有理数的解析与文本化（"p/q" 或整数字符串）。"""
from __future__ import annotations

from fractions import Fraction
from typing import Union

from apps.core.api.exceptions import ValidationException

RationalLike = Union[Fraction, int, str]


def parse_rational(value: RationalLike, *, field: str = "value") -> Fraction:
    """解析单个有理数；拒绝浮点数以保证精确。"""
    if isinstance(value, bool):
        raise ValidationException(f"{field}: 不接受布尔值")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or "." in text or "e" in text.lower():
            raise ValidationException(f"{field}: 无法解析有理数 {value!r}，请使用 p/q 或整数")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise ValidationException(f"{field}: 无法解析有理数 {value!r}")
    raise ValidationException(f"{field}: 不支持的数值类型 {type(value).__name__}")


def format_rational(value: Fraction | int) -> str:
    """输出 "p/q"，分母为 1 时只输出分子。"""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


__all__ = ["RationalLike", "parse_rational", "format_rational"]
