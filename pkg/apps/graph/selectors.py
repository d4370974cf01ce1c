"""图核心只读查询：目录枚举、上界阶梯与语料图。"""
from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterator, List, Tuple

import networkx as nx
from django.conf import settings

from apps.core.api.exceptions import ValidationException

from .model import CatalogBounds, GraphCatalog, KLabeledGraph, WeightedGraph
from .services import canonical_form, is_connected

logger = logging.getLogger(__name__)


# ==== 目录枚举 ====
def _bounded_vectors(length: int, budget: int, cap: int) -> Iterator[Tuple[int, ...]]:
    """长度为 length、每项 ≤ cap、总和 ≤ budget 的非负整数向量。"""
    if length == 0:
        yield ()
        return
    for head in range(min(cap, budget) + 1):
        for tail in _bounded_vectors(length - 1, budget - head, cap):
            yield (head,) + tail


@lru_cache(maxsize=128)
def enumerate_k_labeled(k: int, max_nodes: int, max_total_edges: int, max_multiplicity: int = 2) -> GraphCatalog:
    """上界内每个 k 标号无自环多重图的规范形恰好一次，按 (n, 边数, 边表) 排序。"""
    bounds = CatalogBounds(max_nodes=max_nodes, max_total_edges=max_total_edges, max_multiplicity=max_multiplicity)
    if k < 0:
        raise ValidationException("标号数 k 不能为负")
    if max_nodes < k:
        raise ValidationException(f"max_nodes={max_nodes} 小于 k={k}，目录无法包含 E_k")

    seen = set()
    for n in range(k, max_nodes + 1):
        pairs = list(combinations(range(n), 2))
        for mults in _bounded_vectors(len(pairs), max_total_edges, max_multiplicity):
            edges = tuple((u, v, mult) for (u, v), mult in zip(pairs, mults) if mult)
            seen.add(canonical_form(KLabeledGraph(k=k, n=n, edges=edges)))

    graphs = tuple(sorted(seen, key=lambda g: g.sort_key))
    logger.info("catalog k=%d bounds=%s size=%d", k, bounds, len(graphs))
    return GraphCatalog(k=k, bounds=bounds, graphs=graphs)


def catalog_for(k: int, bounds: CatalogBounds) -> GraphCatalog:
    return enumerate_k_labeled(k, bounds.max_nodes, bounds.max_total_edges, bounds.max_multiplicity)


def simple_patterns(max_nodes: int, *, connected_only: bool = False, k: int = 0) -> GraphCatalog:
    """节点数 ≤ max_nodes 的全部简单 k 标号图（0 标号时即同态轮廓的模式集）。"""
    full = enumerate_k_labeled(k, max_nodes, max_nodes * (max_nodes - 1) // 2, 1)
    if not connected_only:
        return full
    graphs = tuple(g for g in full if g.n >= 1 and is_connected(g))
    return GraphCatalog(k=k, bounds=full.bounds, graphs=graphs)


# ==== 上界配置与阶梯 ====
def default_bounds(k: int) -> CatalogBounds:
    return CatalogBounds(
        max_nodes=k + settings.GHA_DEFAULT_MAX_NODES_OFFSET,
        max_total_edges=settings.GHA_DEFAULT_MAX_TOTAL_EDGES,
        max_multiplicity=settings.GHA_DEFAULT_MAX_MULTIPLICITY,
    )


def ceiling_bounds(k: int) -> CatalogBounds:
    return CatalogBounds(
        max_nodes=k + settings.GHA_CEILING_MAX_NODES_OFFSET,
        max_total_edges=settings.GHA_CEILING_MAX_TOTAL_EDGES,
        max_multiplicity=settings.GHA_DEFAULT_MAX_MULTIPLICITY,
    )


def start_bounds(k: int) -> CatalogBounds:
    return CatalogBounds(
        max_nodes=k + settings.GHA_START_MAX_NODES_OFFSET,
        max_total_edges=settings.GHA_START_MAX_TOTAL_EDGES,
        max_multiplicity=settings.GHA_DEFAULT_MAX_MULTIPLICITY,
    )


def escalation_ladder(start: CatalogBounds, ceiling: CatalogBounds) -> List[CatalogBounds]:
    """从 start 起交替增加边数上界与节点上界，直到 ceiling。"""
    nodes = min(start.max_nodes, ceiling.max_nodes)
    edges = min(start.max_total_edges, ceiling.max_total_edges)
    mult = ceiling.max_multiplicity
    rungs = [CatalogBounds(nodes, edges, mult)]
    grow_edges = True
    while nodes < ceiling.max_nodes or edges < ceiling.max_total_edges:
        if (grow_edges and edges < ceiling.max_total_edges) or nodes >= ceiling.max_nodes:
            edges += 1
        else:
            nodes += 1
        grow_edges = not grow_edges
        rungs.append(CatalogBounds(nodes, edges, mult))
    return rungs


def default_ladder(k: int) -> List[CatalogBounds]:
    return escalation_ladder(start_bounds(k), ceiling_bounds(k))


def sized_catalog(k: int, size: int) -> GraphCatalog:
    """沿默认阶梯取第一个不少于 size 个图的目录，并截取其前 size 个。"""
    catalog = None
    for bounds in default_ladder(k):
        catalog = catalog_for(k, bounds)
        if len(catalog) >= size:
            break
    return catalog.head(size)


# ==== 语料图 ====
def from_networkx(graph: nx.Graph) -> WeightedGraph:
    """单位权简单图；节点按排序后的顺序编号。"""
    nodes = sorted(graph.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return WeightedGraph.from_edges(len(nodes), [(index[u], index[v]) for u, v in graph.edges()])


def path_graph(m: int) -> WeightedGraph:
    return WeightedGraph.from_edges(m, [(i, i + 1) for i in range(m - 1)])


def cycle_graph(m: int) -> WeightedGraph:
    return WeightedGraph.from_edges(m, [(i, (i + 1) % m) for i in range(m)])


def complete_graph(m: int) -> WeightedGraph:
    return WeightedGraph.from_edges(m, list(combinations(range(m), 2)))


def asymmetric_graph() -> WeightedGraph:
    """最小的无非平凡自同构简单图（6 个节点）：路径 0-1-2-3-4，外加节点 5 连接 1 与 2。"""
    return WeightedGraph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (2, 5)])


def weighted_targets() -> Dict[str, WeightedGraph]:
    """三个带权验收目标。"""
    return {
        "p2_skewed": WeightedGraph.from_edges(2, [(0, 1)], alpha=[Fraction(1, 3), Fraction(2, 3)]),
        "p3_half": WeightedGraph.from_edges(3, [(0, 1, Fraction(1, 2)), (1, 2)]),
        "loop3": WeightedGraph.from_edges(3, [(0, 0, 2), (0, 1), (1, 2)]),
    }


def named_graphs() -> Dict[str, WeightedGraph]:
    graphs = {
        "p2": path_graph(2),
        "p3": path_graph(3),
        "c4": cycle_graph(4),
        "k3": complete_graph(3),
        "asym6": asymmetric_graph(),
    }
    graphs.update(weighted_targets())
    return graphs


def connected_simple_graphs(max_nodes: int) -> List[WeightedGraph]:
    """图谱中 1..max_nodes 个节点的全部连通简单图（每个同构类一个）。"""
    if max_nodes > 7:
        raise ValidationException("图谱只覆盖至多 7 个节点的图")
    return [
        from_networkx(g)
        for g in nx.graph_atlas_g()
        if 1 <= g.number_of_nodes() <= max_nodes and nx.is_connected(g)
    ]


__all__ = [
    "enumerate_k_labeled",
    "catalog_for",
    "simple_patterns",
    "default_bounds",
    "ceiling_bounds",
    "start_bounds",
    "escalation_ladder",
    "default_ladder",
    "sized_catalog",
    "from_networkx",
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "asymmetric_graph",
    "weighted_targets",
    "named_graphs",
    "connected_simple_graphs",
]
