"""孪生检测与商图、同构与自同构搜索、k 元组轨道、无孪生图的刚性校验。"""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

from django.conf import settings

from apps.core.api.exceptions import BusinessException, TwinsFoundException, ValidationException
from apps.core.utils.union_find import find_orbits
from apps.graph.model import GraphCatalog, KLabeledGraph, WeightedGraph
from apps.hom.selectors import iter_maps
from apps.hom.services import hom

from .model import NodePartition, Permutation, TuplePartition

logger = logging.getLogger(__name__)

GROUP_CLOSURE_LIMIT = 256


# ==== 孪生 ====
def find_twins(graph: WeightedGraph) -> NodePartition:
    """β 行（含对角元）完全相同的节点归为一块；节点权不参与。"""
    by_row: Dict[Tuple[Fraction, ...], List[int]] = {}
    for i in graph.nodes:
        by_row.setdefault(graph.row(i), []).append(i)
    return NodePartition(blocks=tuple(tuple(b) for b in by_row.values()))


def is_twin_free(graph: WeightedGraph) -> bool:
    return find_twins(graph).is_discrete


def ensure_twin_free(graph: WeightedGraph) -> NodePartition:
    partition = find_twins(graph)
    if not partition.is_discrete:
        raise TwinsFoundException(
            f"目标图存在孪生节点：{list(partition.nontrivial())}",
            data={"blocks": [list(b) for b in partition.blocks]},
        )
    return partition


def twin_quotient(graph: WeightedGraph) -> WeightedGraph:
    """每个孪生类一个节点，α 按类求和，β 取任一代表对（逐对核对一致）。"""
    partition = find_twins(graph)
    if partition.is_discrete:
        return graph
    blocks = partition.blocks
    alpha = tuple(sum((graph.alpha[v] for v in block), Fraction(0)) for block in blocks)
    beta = []
    for a in blocks:
        row = []
        for b in blocks:
            value = graph.beta[a[0]][b[0]]
            if any(graph.beta[u][v] != value for u in a for v in b):
                raise BusinessException(f"孪生类 {a} 与 {b} 之间的边权不一致")
            row.append(value)
        beta.append(tuple(row))
    quotient = WeightedGraph(alpha=alpha, beta=tuple(beta))
    logger.info("twin quotient %d -> %d nodes", graph.m, quotient.m)
    return quotient


def quotient_hom_mismatches(graph: WeightedGraph, catalog: GraphCatalog) -> List[KLabeledGraph]:
    """目录中 hom(F, G) != hom(F, 孪生商图) 的图 F（应为空）。"""
    quotient = twin_quotient(graph)
    return [pattern for pattern in catalog if hom(pattern, graph) != hom(pattern, quotient)]


def reduce_twins(graph: WeightedGraph, *, strict: bool = False) -> Tuple[WeightedGraph, NodePartition]:
    """strict 时有孪生即拒绝；否则返回商图与所用划分。"""
    partition = find_twins(graph)
    if partition.is_discrete:
        return graph, partition
    if strict:
        ensure_twin_free(graph)
    logger.warning("twins %s found; quotient applied", list(partition.nontrivial()))
    return twin_quotient(graph), partition


# ==== 保权映射搜索 ====
def _node_profile(graph: WeightedGraph, i: int) -> tuple:
    return (graph.alpha[i], graph.beta[i][i], tuple(sorted(graph.beta[i])))


def _iter_beta_maps(
    source: WeightedGraph,
    target: WeightedGraph,
    *,
    injective: bool,
    match_alpha: bool,
    pinned: Optional[Mapping[int, int]] = None,
) -> Iterator[Tuple[int, ...]]:
    """回溯枚举满足 β_target(σ(i), σ(j)) == β_source(i, j)（含 i == j）的映射 σ。

    injective 时按节点特征剪枝（只对双射有效）。
    """
    m = source.m
    if injective and m != target.m:
        return
    if injective:
        target_profiles = [_node_profile(target, j) for j in target.nodes]
        candidates = [
            [j for j in target.nodes if target_profiles[j] == _node_profile(source, i)] for i in source.nodes
        ]
    else:
        candidates = [
            [j for j in target.nodes if target.beta[j][j] == source.beta[i][i]] for i in source.nodes
        ]
    if match_alpha:
        candidates = [[j for j in cands if target.alpha[j] == source.alpha[i]] for i, cands in enumerate(candidates)]
    if pinned:
        candidates = [[j for j in cands if j == pinned.get(i, j)] for i, cands in enumerate(candidates)]

    # 固定节点先行；无固定时按节点顺序，结果按字典序产出
    order = sorted(source.nodes, key=lambda i: (i not in pinned, i)) if pinned else list(source.nodes)
    assignment: Dict[int, int] = {}
    used = set()

    def walk(pos: int) -> Iterator[Tuple[int, ...]]:
        if pos == m:
            yield tuple(assignment[i] for i in source.nodes)
            return
        i = order[pos]
        for j in candidates[i]:
            if injective and j in used:
                continue
            if all(target.beta[assignment[u]][j] == source.beta[u][i] for u in order[:pos]):
                assignment[i] = j
                if injective:
                    used.add(j)
                yield from walk(pos + 1)
                del assignment[i]
                used.discard(j)

    yield from walk(0)


def iter_isomorphisms(
    g1: WeightedGraph, g2: WeightedGraph, *, pinned: Optional[Mapping[int, int]] = None
) -> Iterator[Permutation]:
    """全部保 α、β 的双射 V(G1) → V(G2)，images[i] 为 i 在 G2 中的像；pinned 固定部分节点的像。"""
    for images in _iter_beta_maps(g1, g2, injective=True, match_alpha=True, pinned=pinned):
        yield Permutation(images=images)


def find_isomorphism(g1: WeightedGraph, g2: WeightedGraph) -> Optional[Permutation]:
    return next(iter_isomorphisms(g1, g2), None)


def is_isomorphism(sigma: Permutation, g1: WeightedGraph, g2: WeightedGraph) -> bool:
    """逐项核对 α_{σ(i)} = α_i 与 β_{σ(i)σ(j)} = β_ij。"""
    if sigma.m != g1.m or g1.m != g2.m:
        return False
    return all(g2.alpha[sigma(i)] == g1.alpha[i] for i in g1.nodes) and all(
        g2.beta[sigma(i)][sigma(j)] == g1.beta[i][j] for i in g1.nodes for j in g1.nodes
    )


def automorphisms(graph: WeightedGraph) -> List[Permutation]:
    """Aut(G)，第一个元素为恒等置换；小群上核对复合与逆封闭。"""
    group = list(iter_isomorphisms(graph, graph))
    identity = Permutation.identity(graph.m)
    if not group or group[0] != identity:
        raise BusinessException("自同构列表缺少恒等置换")
    if len(group) <= GROUP_CLOSURE_LIMIT:
        members = set(group)
        for sigma in group:
            if sigma.inverse() not in members:
                raise BusinessException(f"自同构 {sigma.images} 的逆不在群内")
            for tau in group:
                if sigma.compose(tau) not in members:
                    raise BusinessException("自同构集合对复合不封闭")
    logger.debug("automorphisms m=%d order=%d", graph.m, len(group))
    return group


# ==== 轨道 ====
def orbit_partition(graph: WeightedGraph, k: int) -> TuplePartition:
    """Aut(G) 在 V(G)^k 上按 φ ↦ φσ 作用的轨道（并查集合并）。"""
    if k < 0:
        raise ValidationException("k 不能为负")
    group = automorphisms(graph)
    generators = [sigma for sigma in group if not sigma.is_identity]
    orbits = find_orbits(generators, iter_maps(graph.m, k), lambda sigma, phi: sigma.act(phi))
    return TuplePartition.from_groups(k, graph.m, orbits)


def orbit_count(graph: WeightedGraph, k: int) -> int:
    return len(orbit_partition(graph, k))


# ==== 刚性 ====
def verify_twin_free_rigidity(graph: WeightedGraph) -> bool:
    """无孪生图上每个保 β 的自映射 V(G) → V(G) 都是双射（穷举全部 m^m 个映射，零冲突处剪枝）。"""
    ensure_twin_free(graph)
    limit = settings.GHA_RIGIDITY_MAX_NODES
    if graph.m > limit:
        raise ValidationException(f"m={graph.m} 超过自映射穷举上限 {limit}")
    preserving = 0
    for images in _iter_beta_maps(graph, graph, injective=False, match_alpha=False):
        preserving += 1
        if len(set(images)) != graph.m:
            logger.warning("non-bijective beta-preserving self-map %s", images)
            return False
    logger.info("rigidity m=%d: %d beta-preserving maps, all bijective", graph.m, preserving)
    return True


__all__ = [
    "find_twins",
    "is_twin_free",
    "ensure_twin_free",
    "twin_quotient",
    "quotient_hom_mismatches",
    "reduce_twins",
    "iter_isomorphisms",
    "find_isomorphism",
    "is_isomorphism",
    "automorphisms",
    "orbit_partition",
    "orbit_count",
    "verify_twin_free_rigidity",
]
