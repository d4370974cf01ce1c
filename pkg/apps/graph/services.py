"""图核心运算：粘合积、规范形、迹、标号扩张与量子图乘法。

所有函数均为纯函数，输入输出不可变。
"""
from __future__ import annotations

import logging
from collections import deque
from fractions import Fraction
from functools import lru_cache
from itertools import groupby, permutations, product
from typing import Callable, Dict, List, Optional, Sequence, Tuple, TypeVar

from faker import Faker

from apps.core.api.exceptions import ValidationException

from .model import CatalogBounds, Edge, Escalation, GraphCatalog, KLabeledGraph, QuantumGraph, WeightedGraph

logger = logging.getLogger(__name__)

T = TypeVar("T")


def _ensure_same_k(k1: int, k2: int) -> None:
    if k1 != k2:
        raise ValidationException(f"标号数不一致：{k1} != {k2}")


# ==== 粘合积与规范形 ====
def glue(f1: KLabeledGraph, f2: KLabeledGraph) -> KLabeledGraph:
    """不交并后按标号粘合；同一对标号节点之间的边重数相加。"""
    _ensure_same_k(f1.k, f2.k)
    k = f1.k
    shift = f1.n - k

    def relabel(u: int) -> int:
        return u if u < k else u + shift

    edges = list(f1.edges) + [(relabel(u), relabel(v), mult) for u, v, mult in f2.edges]
    return KLabeledGraph(k=k, n=f1.n + f2.n - k, edges=tuple(edges))


def _node_invariants(graph: KLabeledGraph) -> Dict[int, tuple]:
    """保标号同构下不变的节点特征，用于把置换限制在同特征节点之间。"""
    adj = graph.adjacency()
    degree = {u: sum(adj[u].values()) for u in range(graph.n)}
    invariants = {}
    for u in range(graph.k, graph.n):
        to_labels = tuple(adj[u].get(label, 0) for label in range(graph.k))
        around = tuple(sorted((mult, degree[w]) for w, mult in adj[u].items()))
        invariants[u] = (degree[u], to_labels, around)
    return invariants


@lru_cache(maxsize=1 << 16)
def canonical_form(graph: KLabeledGraph) -> KLabeledGraph:
    """保标号同构类的唯一代表：在同特征无标号节点的置换中取字典序最小的边表。"""
    if graph.n - graph.k <= 1:
        return graph
    invariants = _node_invariants(graph)
    ordered = sorted(range(graph.k, graph.n), key=lambda u: invariants[u])
    groups = [list(block) for _, block in groupby(ordered, key=lambda u: invariants[u])]

    best: Optional[Tuple[Edge, ...]] = None
    for choice in product(*(permutations(block) for block in groups)):
        relabel = list(range(graph.n))
        position = graph.k
        for block in choice:
            for u in block:
                relabel[u] = position
                position += 1
        edges = tuple(
            sorted((min(relabel[u], relabel[v]), max(relabel[u], relabel[v]), mult) for u, v, mult in graph.edges)
        )
        if best is None or edges < best:
            best = edges
    return KLabeledGraph(k=graph.k, n=graph.n, edges=best or ())


def is_isomorphic_labeled(f1: KLabeledGraph, f2: KLabeledGraph) -> bool:
    return f1.k == f2.k and canonical_form(f1) == canonical_form(f2)


# ==== 迹与标号扩张 ====
def trace_graph(graph: KLabeledGraph) -> KLabeledGraph:
    """擦除标号 k：节点与边不变，原标号 k 的节点成为第一个无标号节点。"""
    if graph.k < 1:
        raise ValidationException("0 标号图没有可擦除的标号")
    return KLabeledGraph(k=graph.k - 1, n=graph.n, edges=graph.edges)


def extend_with_isolated_label(graph: KLabeledGraph) -> KLabeledGraph:
    """F ⊗ E_1：新增一个孤立节点并标为 k+1。"""
    k = graph.k

    def shift(u: int) -> int:
        return u if u < k else u + 1

    edges = tuple((shift(u), shift(v), mult) for u, v, mult in graph.edges)
    return KLabeledGraph(k=k + 1, n=graph.n + 1, edges=edges)


def forget_labels(graph: KLabeledGraph) -> KLabeledGraph:
    """0 标号副本：所有节点都参与求和。"""
    return KLabeledGraph(k=0, n=graph.n, edges=graph.edges)


def is_connected(graph: KLabeledGraph) -> bool:
    if graph.n <= 1:
        return True
    adj = graph.adjacency()
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == graph.n


# ==== 量子图 ====
def quantum_product(x: QuantumGraph, y: QuantumGraph) -> QuantumGraph:
    """glue 的双线性扩张，结果键为规范形。"""
    _ensure_same_k(x.k, y.k)
    terms: List[Tuple[KLabeledGraph, Fraction]] = []
    for f1, c1 in x.terms:
        for f2, c2 in y.terms:
            terms.append((glue(f1, f2), c1 * c2))
    return QuantumGraph.from_terms(x.k, terms)


# ==== 随机目标图 ====
def seed_weighted_graph(
    m: int,
    *,
    seed: int = 0,
    density: int = 50,
    loop_density: int = 20,
    max_numerator: int = 5,
    max_denominator: int = 3,
) -> WeightedGraph:
    """用 Faker 生成随机有理加权目标图（density 为百分比）。"""
    if m < 1:
        raise ValidationException("节点数至少为 1")
    faker = Faker()
    faker.seed_instance(seed)

    def weight() -> Fraction:
        return Fraction(
            faker.random_int(min=1, max=max_numerator),
            faker.random_int(min=1, max=max_denominator),
        )

    alpha = [weight() for _ in range(m)]
    edges = []
    for i in range(m):
        if faker.random_int(min=0, max=99) < loop_density:
            edges.append((i, i, weight()))
        for j in range(i + 1, m):
            if faker.random_int(min=0, max=99) < density:
                edges.append((i, j, weight()))
    return WeightedGraph.from_edges(m, edges, alpha=alpha)


# ==== 目录升级 ====
def escalate(
    k: int,
    ladder: Sequence[CatalogBounds],
    evaluate: Callable[[GraphCatalog], T],
    *,
    target: Optional[T] = None,
    patience: int = 2,
) -> Escalation[T]:
    """沿阶梯逐级求值：达到 target 即认证；连续 patience 次升级不变即判定稳定。"""
    from .selectors import catalog_for  # 延迟导入以避免循环

    if not ladder:
        raise ValidationException("上界阶梯不能为空")
    history: List[T] = []
    catalog: Optional[GraphCatalog] = None
    for bounds in ladder:
        catalog = catalog_for(k, bounds)
        value = evaluate(catalog)
        history.append(value)
        logger.info("escalate k=%d rung=%d bounds=%s size=%d", k, len(history) - 1, bounds, len(catalog))
        certified = target is not None and value == target
        stabilized = len(history) > patience and all(v == value for v in history[-patience - 1 :])
        if certified or stabilized:
            return Escalation(
                value=value,
                bounds=bounds,
                catalog_size=len(catalog),
                escalations=len(history) - 1,
                certified=certified,
                stabilized=stabilized,
            )
    return Escalation(
        value=history[-1],
        bounds=ladder[-1],
        catalog_size=len(catalog),
        escalations=len(history) - 1,
        certified=False,
        stabilized=False,
    )


__all__ = [
    "escalate",
    "glue",
    "canonical_form",
    "is_isomorphic_labeled",
    "trace_graph",
    "extend_with_isolated_label",
    "forget_labels",
    "is_connected",
    "quantum_product",
    "seed_weighted_graph",
]
