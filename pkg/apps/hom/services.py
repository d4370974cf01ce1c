"""精确加权同态计数：alpha_φ、hom、hom_φ 及其在量子图上的线性扩张。

求值为暴力枚举全部扩张，遇到零边权立即剪枝。内部先把权乘以公分母化为整数，
最后一次性约分，避免逐项的分数运算。
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import List, Sequence, Tuple, Union

from apps.core.api.exceptions import ValidationException
from apps.graph.model import KLabeledGraph, QuantumGraph, WeightedGraph
from apps.graph.services import forget_labels

from .model import MapAssignment
from .selectors import iter_maps

logger = logging.getLogger(__name__)

MapLike = Union[MapAssignment, Sequence[int]]


@dataclass(frozen=True)
class _IntegerWeights:
    alpha: Tuple[int, ...]
    beta: Tuple[Tuple[int, ...], ...]
    alpha_scale: int
    beta_scale: int


@dataclass(frozen=True)
class _ExtensionPlan:
    """labeled_edges 两端均为标号节点；back_edges[i] 为无标号节点 k+i 指向更小编号节点的边。"""

    k: int
    n: int
    total_edges: int
    labeled_edges: Tuple[Tuple[int, int, int], ...]
    back_edges: Tuple[Tuple[Tuple[int, int], ...], ...]


@lru_cache(maxsize=256)
def _integer_weights(graph: WeightedGraph) -> _IntegerWeights:
    alpha_scale = lcm(*(a.denominator for a in graph.alpha))
    beta_scale = lcm(*(b.denominator for row in graph.beta for b in row))
    return _IntegerWeights(
        alpha=tuple(int(a * alpha_scale) for a in graph.alpha),
        beta=tuple(tuple(int(b * beta_scale) for b in row) for row in graph.beta),
        alpha_scale=alpha_scale,
        beta_scale=beta_scale,
    )


@lru_cache(maxsize=1 << 14)
def _extension_plan(pattern: KLabeledGraph) -> _ExtensionPlan:
    k = pattern.k
    labeled: List[Tuple[int, int, int]] = []
    back: List[List[Tuple[int, int]]] = [[] for _ in range(pattern.n - k)]
    for u, v, mult in pattern.edges:
        if v < k:
            labeled.append((u, v, mult))
        else:
            back[v - k].append((u, mult))
    return _ExtensionPlan(
        k=k,
        n=pattern.n,
        total_edges=pattern.total_edges,
        labeled_edges=tuple(labeled),
        back_edges=tuple(tuple(b) for b in back),
    )


def _extension_sum(plan: _ExtensionPlan, weights: _IntegerWeights, targets: Tuple[int, ...]) -> int:
    """缩放后的 Σ_{ψ 扩张 φ} (α_ψ/α_φ)·hom_ψ，结果为整数。"""
    beta = weights.beta
    alpha = weights.alpha
    m = len(alpha)

    factor = 1
    for u, v, mult in plan.labeled_edges:
        b = beta[targets[u]][targets[v]]
        if b == 0:
            return 0
        factor *= b**mult

    assignment = list(targets) + [0] * (plan.n - plan.k)

    def walk(pos: int) -> int:
        if pos == plan.n:
            return 1
        acc = 0
        back = plan.back_edges[pos - plan.k]
        for c in range(m):
            weight = alpha[c]
            for w, mult in back:
                b = beta[assignment[w]][c]
                if b == 0:
                    weight = 0
                    break
                weight *= b if mult == 1 else b**mult
            if weight:
                assignment[pos] = c
                acc += weight * walk(pos + 1)
        return acc

    return factor * walk(plan.k)


def _as_targets(phi: MapLike) -> Tuple[int, ...]:
    if isinstance(phi, MapAssignment):
        return phi.targets
    return tuple(int(t) for t in phi)


# ==== 对外运算 ====
def alpha_weight(phi: MapLike, graph: WeightedGraph) -> Fraction:
    """α_φ = ∏ α(φ(i))；k = 0 时为 1。"""
    targets = MapAssignment(_as_targets(phi)).check(graph.m).targets
    result = Fraction(1)
    for t in targets:
        result *= graph.alpha[t]
    return result


def hom_partial(pattern: KLabeledGraph, graph: WeightedGraph, phi: MapLike) -> Fraction:
    """hom_φ(F, G)：对 φ 的全部扩张求和，每个扩张只计无标号节点的 α。"""
    targets = _as_targets(phi)
    if len(targets) != pattern.k:
        raise ValidationException(f"映射长度 {len(targets)} 与图的标号数 k={pattern.k} 不一致")
    MapAssignment(targets).check(graph.m)
    plan = _extension_plan(pattern)
    weights = _integer_weights(graph)
    numerator = _extension_sum(plan, weights, targets)
    if numerator == 0:
        return Fraction(0)
    denominator = weights.alpha_scale ** (plan.n - plan.k) * weights.beta_scale**plan.total_edges
    return Fraction(numerator, denominator)


def hom(pattern: KLabeledGraph, graph: WeightedGraph) -> Fraction:
    """hom(F, G)：忽略 F 的标号，对 V(F) → V(G) 的全部映射求和。"""
    return hom_partial(forget_labels(pattern), graph, ())


def hom_quantum(x: QuantumGraph, graph: WeightedGraph) -> Fraction:
    """hom(., G) 在量子图上的线性扩张。"""
    return sum((coeff * hom(term, graph) for term, coeff in x.terms), Fraction(0))


@lru_cache(maxsize=1 << 15)
def hom_vector(pattern: KLabeledGraph, graph: WeightedGraph) -> Tuple[Fraction, ...]:
    """按字典序排列的 (hom_φ(F, G))_φ，φ 取遍 V(G)^k。"""
    return tuple(hom_partial(pattern, graph, phi) for phi in iter_maps(graph.m, pattern.k))


def hom_column(args: Tuple[KLabeledGraph, WeightedGraph]) -> Tuple[Fraction, ...]:
    """hom_vector 的单参数形式，供进程池使用。"""
    pattern, graph = args
    return hom_vector(pattern, graph)


def normalize_weights(graph: WeightedGraph) -> WeightedGraph:
    """把节点权缩放为 Σα = 1；边权不变。"""
    total = graph.total_weight
    return WeightedGraph(alpha=tuple(a / total for a in graph.alpha), beta=graph.beta)


__all__ = [
    "MapLike",
    "alpha_weight",
    "hom_partial",
    "hom",
    "hom_quantum",
    "hom_vector",
    "hom_column",
    "normalize_weights",
]
