"""映射空间 V(G)^k 的枚举与定位（字典序）。"""
from __future__ import annotations

from itertools import product
from typing import Iterator, Tuple


def iter_maps(m: int, k: int) -> Iterator[Tuple[int, ...]]:
    """按字典序枚举全部 m^k 个映射。"""
    return product(range(m), repeat=k)


def map_count(m: int, k: int) -> int:
    return m**k


def map_index(targets: Tuple[int, ...], m: int) -> int:
    """映射在字典序中的位置。"""
    index = 0
    for t in targets:
        index = index * m + t
    return index


__all__ = ["iter_maps", "map_count", "map_index"]
