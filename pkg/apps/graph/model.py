"""图核心领域类型：加权目标图、k 标号多重图、量子图与有限目录。

全部类型构造后不可变，可安全地在多个工作进程间共享。
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Generic, Iterable, Iterator, Mapping, Sequence, Tuple, TypeVar

from apps.core.api.exceptions import ValidationException
from apps.core.utils.rationals import RationalLike, parse_rational

Edge = Tuple[int, int, int]
T = TypeVar("T")


@dataclass(frozen=True)
class WeightedGraph:
    """目标图 G：正的节点权 alpha 与对称的边权矩阵 beta（对角线为自环权）。

    权为 0 的边等同于无边。
    """

    alpha: Tuple[Fraction, ...]
    beta: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        alpha = tuple(parse_rational(a, field=f"alpha[{i}]") for i, a in enumerate(self.alpha))
        m = len(alpha)
        if m < 1:
            raise ValidationException("目标图至少需要一个节点")
        for i, a in enumerate(alpha):
            if a <= 0:
                raise ValidationException(f"alpha[{i}] 必须为正数，当前为 {a}")
        if len(self.beta) != m:
            raise ValidationException(f"beta 必须是 {m}x{m} 方阵")
        beta = []
        for i, row in enumerate(self.beta):
            if len(row) != m:
                raise ValidationException(f"beta 第 {i} 行长度应为 {m}")
            beta.append(tuple(parse_rational(b, field=f"beta[{i}][{j}]") for j, b in enumerate(row)))
        for i in range(m):
            for j in range(i + 1, m):
                if beta[i][j] != beta[j][i]:
                    raise ValidationException(f"beta 不对称：beta[{i}][{j}] != beta[{j}][{i}]")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", tuple(beta))

    @property
    def m(self) -> int:
        return len(self.alpha)

    @property
    def nodes(self) -> range:
        return range(self.m)

    @property
    def total_weight(self) -> Fraction:
        return sum(self.alpha, Fraction(0))

    def row(self, i: int) -> Tuple[Fraction, ...]:
        return self.beta[i]

    @classmethod
    def from_edges(
        cls,
        m: int,
        edges: Iterable[Tuple[int, int] | Tuple[int, int, RationalLike]],
        alpha: Sequence[RationalLike] | None = None,
    ) -> "WeightedGraph":
        """由边表构造；(i, i, w) 表示自环，未给权的边权为 1。"""
        beta = [[Fraction(0)] * m for _ in range(m)]
        for edge in edges:
            i, j = edge[0], edge[1]
            weight = parse_rational(edge[2]) if len(edge) > 2 else Fraction(1)
            if not (0 <= i < m and 0 <= j < m):
                raise ValidationException(f"边 ({i}, {j}) 超出节点范围 [0, {m})")
            beta[i][j] = weight
            beta[j][i] = weight
        weights = tuple(alpha) if alpha is not None else (1,) * m
        return cls(alpha=weights, beta=tuple(tuple(r) for r in beta))


@dataclass(frozen=True)
class KLabeledGraph:
    """k 标号无自环多重图。节点 0..k-1 依次带标号 1..k，其余节点无标号。

    edges 规范化为按 (u, v) 排序、u < v、重数合并后的 (u, v, mult) 元组。
    """

    k: int
    n: int
    edges: Tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.k < 0:
            raise ValidationException("标号数 k 不能为负")
        if self.n < self.k:
            raise ValidationException(f"节点数 n={self.n} 小于标号数 k={self.k}")
        counter: Counter = Counter()
        for edge in self.edges:
            if len(edge) not in (2, 3):
                raise ValidationException(f"无效的边 {edge!r}")
            u, v = int(edge[0]), int(edge[1])
            mult = int(edge[2]) if len(edge) == 3 else 1
            if u == v:
                raise ValidationException(f"不允许自环：节点 {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValidationException(f"边 ({u}, {v}) 超出节点范围 [0, {self.n})")
            if mult < 1:
                raise ValidationException(f"边 ({u}, {v}) 的重数必须为正整数")
            counter[(min(u, v), max(u, v))] += mult
        normalized = tuple(sorted((u, v, mult) for (u, v), mult in counter.items()))
        object.__setattr__(self, "edges", normalized)

    @property
    def total_edges(self) -> int:
        return sum(mult for _, _, mult in self.edges)

    @property
    def is_simple(self) -> bool:
        return all(mult == 1 for _, _, mult in self.edges)

    @property
    def sort_key(self) -> Tuple[int, int, Tuple[Edge, ...]]:
        """目录排序键：(节点数, 总边重数, 规范边表)。"""
        return (self.n, self.total_edges, self.edges)

    def multiplicity(self, u: int, v: int) -> int:
        a, b = min(u, v), max(u, v)
        for x, y, mult in self.edges:
            if (x, y) == (a, b):
                return mult
        return 0

    def adjacency(self) -> Dict[int, Dict[int, int]]:
        adj: Dict[int, Dict[int, int]] = {u: {} for u in range(self.n)}
        for u, v, mult in self.edges:
            adj[u][v] = mult
            adj[v][u] = mult
        return adj

    @classmethod
    def empty(cls, k: int, n: int | None = None) -> "KLabeledGraph":
        """E_k（n 给定时附加 n-k 个孤立的无标号节点）。"""
        return cls(k=k, n=k if n is None else n)

    @classmethod
    def single_edge(cls, k: int, i: int, j: int) -> "KLabeledGraph":
        """k_ij：k 个标号节点，仅在节点 i、j 之间有一条边（0 起始）。"""
        return cls(k=k, n=k, edges=((i, j, 1),))

    @classmethod
    def complete(cls, k: int) -> "KLabeledGraph":
        """K_k：k 个标号节点上的完全图。"""
        return cls(k=k, n=k, edges=tuple((i, j, 1) for i in range(k) for j in range(i + 1, k)))


@dataclass(frozen=True)
class QuantumGraph:
    """k 标号图的有理线性组合。terms 按目录顺序排序、键为规范形、系数非零。

    通过 from_terms 构造以保证键的规范化。
    """

    k: int
    terms: Tuple[Tuple[KLabeledGraph, Fraction], ...] = ()

    def __post_init__(self):
        merged: Dict[KLabeledGraph, Fraction] = {}
        for graph, coeff in self.terms:
            if graph.k != self.k:
                raise ValidationException(f"量子图的项标号数不一致：{graph.k} != {self.k}")
            merged[graph] = merged.get(graph, Fraction(0)) + parse_rational(coeff)
        ordered = tuple(
            sorted(((g, c) for g, c in merged.items() if c != 0), key=lambda item: item[0].sort_key)
        )
        object.__setattr__(self, "terms", ordered)

    @classmethod
    def from_terms(cls, k: int, terms: Mapping[KLabeledGraph, RationalLike] | Iterable) -> "QuantumGraph":
        from .services import canonical_form  # 延迟导入以避免循环

        items = terms.items() if isinstance(terms, Mapping) else terms
        return cls(k=k, terms=tuple((canonical_form(g), parse_rational(c)) for g, c in items))

    @classmethod
    def of(cls, graph: KLabeledGraph, coeff: RationalLike = 1) -> "QuantumGraph":
        return cls.from_terms(graph.k, [(graph, coeff)])

    @classmethod
    def zero(cls, k: int) -> "QuantumGraph":
        return cls(k=k)

    def as_dict(self) -> Dict[KLabeledGraph, Fraction]:
        return dict(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def _check_k(self, other: "QuantumGraph") -> None:
        if self.k != other.k:
            raise ValidationException(f"量子图标号数不一致：{self.k} != {other.k}")

    def __add__(self, other: "QuantumGraph") -> "QuantumGraph":
        self._check_k(other)
        return QuantumGraph(k=self.k, terms=self.terms + other.terms)

    def scale(self, coeff: RationalLike) -> "QuantumGraph":
        c = parse_rational(coeff)
        return QuantumGraph(k=self.k, terms=tuple((g, v * c) for g, v in self.terms))

    def __neg__(self) -> "QuantumGraph":
        return self.scale(-1)

    def __sub__(self, other: "QuantumGraph") -> "QuantumGraph":
        return self + (-other)

    def __rmul__(self, coeff: RationalLike) -> "QuantumGraph":
        return self.scale(coeff)


@dataclass(frozen=True)
class CatalogBounds:
    """目录的枚举上界。"""

    max_nodes: int
    max_total_edges: int
    max_multiplicity: int = 2

    def __post_init__(self):
        if self.max_nodes < 0 or self.max_total_edges < 0:
            raise ValidationException("目录上界不能为负")
        if self.max_multiplicity < 1:
            raise ValidationException("max_multiplicity 至少为 1")


@dataclass(frozen=True)
class GraphCatalog:
    """按 (n, 总边重数, 规范边表) 排序、同构去重后的 k 标号图列表。"""

    k: int
    bounds: CatalogBounds
    graphs: Tuple[KLabeledGraph, ...] = field(default=())

    @property
    def max_nodes(self) -> int:
        return self.bounds.max_nodes

    @property
    def max_total_edges(self) -> int:
        return self.bounds.max_total_edges

    @property
    def max_multiplicity(self) -> int:
        return self.bounds.max_multiplicity

    def __len__(self) -> int:
        return len(self.graphs)

    def __iter__(self) -> Iterator[KLabeledGraph]:
        return iter(self.graphs)

    def __getitem__(self, index: int) -> KLabeledGraph:
        return self.graphs[index]

    def index(self, graph: KLabeledGraph) -> int:
        return self.graphs.index(graph)

    def head(self, size: int) -> "GraphCatalog":
        """保持顺序的前缀子目录。"""
        return GraphCatalog(k=self.k, bounds=self.bounds, graphs=self.graphs[:size])


@dataclass(frozen=True)
class Escalation(Generic[T]):
    """沿上界阶梯逐级扩大目录后的结果。

    certified：取值达到给定目标（理论上界），无需继续；stabilized：连续两次升级取值不变；
    两者都不成立时说明阶梯已到顶。
    """

    value: T
    bounds: CatalogBounds
    catalog_size: int
    escalations: int
    certified: bool
    stabilized: bool

    @property
    def reached_ceiling(self) -> bool:
        return not (self.certified or self.stabilized)


__all__ = [
    "Edge",
    "Escalation",
    "WeightedGraph",
    "KLabeledGraph",
    "QuantumGraph",
    "CatalogBounds",
    "GraphCatalog",
]
