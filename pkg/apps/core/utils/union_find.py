"""按秩合并的并查集与一般群作用的轨道。"""
from __future__ import annotations

from typing import Callable, Dict, Hashable, Iterable, List, TypeVar

X = TypeVar("X", bound=Hashable)
G = TypeVar("G")


class UnionFind:
    def __init__(self, items: Iterable[X]):
        self.parent: Dict[X, X] = {x: x for x in items}
        self.rank: Dict[X, int] = {x: 0 for x in self.parent}
        self.size: Dict[X, int] = {x: 1 for x in self.parent}

    def find(self, x: X) -> X:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: X, y: X) -> bool:
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x
        self.size[x] += self.size[y]
        del self.rank[y]
        return True

    def __len__(self) -> int:
        return len(self.rank)

    def groups(self) -> List[List[X]]:
        """按元素首次出现的顺序返回各等价类。"""
        grouped: Dict[X, List[X]] = {}
        for x in self.parent:
            grouped.setdefault(self.find(x), []).append(x)
        return list(grouped.values())


def find_orbits(gens: Iterable[G], space: Iterable[X], action: Callable[[G, X], X]) -> List[List[X]]:
    """一般群作用的轨道：对每个生成元把 x 与 action(g, x) 合并。"""
    space = list(space)
    uf = UnionFind(space)
    for g in gens:
        for x in space:
            uf.union(x, action(g, x))
    return uf.groups()


__all__ = ["UnionFind", "find_orbits"]
