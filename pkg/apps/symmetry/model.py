"""节点划分、置换与 V(G)^k 上的划分。"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Sequence, Tuple

from apps.core.api.exceptions import ValidationException

Block = Tuple[int, ...]
TupleBlock = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class NodePartition:
    """块内排序、块按最小元素排序。"""

    blocks: Tuple[Block, ...]

    def __post_init__(self):
        normalized = []
        seen = set()
        for block in self.blocks:
            block = tuple(sorted(int(v) for v in block))
            if not block:
                raise ValidationException("划分的块不能为空")
            if seen.intersection(block):
                raise ValidationException(f"划分的块相交：{block}")
            seen.update(block)
            normalized.append(block)
        object.__setattr__(self, "blocks", tuple(sorted(normalized)))

    @classmethod
    def discrete(cls, m: int) -> "NodePartition":
        return cls(blocks=tuple((i,) for i in range(m)))

    @property
    def size(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def is_discrete(self) -> bool:
        return all(len(b) == 1 for b in self.blocks)

    def block_of(self) -> Dict[int, int]:
        """节点 → 块序号。"""
        return {v: i for i, block in enumerate(self.blocks) for v in block}

    def nontrivial(self) -> Tuple[Block, ...]:
        return tuple(b for b in self.blocks if len(b) > 1)


@dataclass(frozen=True)
class Permutation:
    """images[i] = σ(i)。"""

    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        if sorted(images) != list(range(len(images))):
            raise ValidationException(f"不是置换：{images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, m: int) -> "Permutation":
        return cls(images=tuple(range(m)))

    @classmethod
    def transposition(cls, m: int, i: int, j: int) -> "Permutation":
        images = list(range(m))
        images[i], images[j] = j, i
        return cls(images=tuple(images))

    @property
    def m(self) -> int:
        return len(self.images)

    @property
    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.images))

    def __call__(self, i: int) -> int:
        return self.images[i]

    def compose(self, other: "Permutation") -> "Permutation":
        """(self ∘ other)(i) = self(other(i))。"""
        if self.m != other.m:
            raise ValidationException("置换长度不一致")
        return Permutation(images=tuple(self.images[v] for v in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.m
        for i, v in enumerate(self.images):
            inv[v] = i
        return Permutation(images=tuple(inv))

    def act(self, targets: Sequence[int]) -> Tuple[int, ...]:
        """φ ↦ φσ，逐坐标作用。"""
        return tuple(self.images[t] for t in targets)


@dataclass(frozen=True)
class TuplePartition:
    """V(G)^k 的划分；块内按字典序、块按首元素排序，因此相等即块对块相同。"""

    k: int
    m: int
    blocks: Tuple[TupleBlock, ...]

    def __post_init__(self):
        normalized = []
        total = 0
        seen = set()
        for block in self.blocks:
            block = tuple(sorted(tuple(int(t) for t in phi) for phi in block))
            if not block:
                raise ValidationException("划分的块不能为空")
            for phi in block:
                if len(phi) != self.k or any(not 0 <= t < self.m for t in phi):
                    raise ValidationException(f"映射 {phi} 不属于 V(G)^{self.k}")
            seen.update(block)
            total += len(block)
            normalized.append(block)
        if total != len(seen) or total != self.m**self.k:
            raise ValidationException(f"块未划分 V(G)^{self.k}：覆盖 {len(seen)} 个映射，应为 {self.m ** self.k}")
        object.__setattr__(self, "blocks", tuple(sorted(normalized)))

    @classmethod
    def from_groups(cls, k: int, m: int, groups: Iterable[Iterable[Sequence[int]]]) -> "TuplePartition":
        return cls(k=k, m=m, blocks=tuple(tuple(tuple(phi) for phi in g) for g in groups))

    def __len__(self) -> int:
        return len(self.blocks)

    def block_of(self) -> Dict[Tuple[int, ...], int]:
        return {phi: i for i, block in enumerate(self.blocks) for phi in block}

    def same_block(self, phi: Sequence[int], psi: Sequence[int]) -> bool:
        index = self.block_of()
        return index[tuple(phi)] == index[tuple(psi)]

    def refines(self, other: "TuplePartition") -> bool:
        """self 的每个块都落在 other 的某个块内。"""
        index = other.block_of()
        return all(len({index[phi] for phi in block}) == 1 for block in self.blocks)


__all__ = ["Block", "NodePartition", "Permutation", "TuplePartition"]
