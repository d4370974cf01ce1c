"""同态轮廓、双顶点构件与同构判定。

非同构只由区分模式证明；轮廓在有限目录上相同从不当作同构的证据，此时改用显式搜索。
"""
from __future__ import annotations

import logging
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from django.conf import settings

from apps.core.api.exceptions import BusinessException, ValidationException
from apps.core.utils.parallel import parallel_map
from apps.graph.model import GraphCatalog, KLabeledGraph, WeightedGraph
from apps.graph.selectors import simple_patterns
from apps.graph.services import is_connected
from apps.hom.services import hom, hom_partial
from apps.symmetry.model import Permutation
from apps.symmetry.services import find_isomorphism, find_twins, is_isomorphism, iter_isomorphisms, twin_quotient

from .model import DistinguishReport, GadgetReport, IsoVerdict, PairVerdict, Verdict

logger = logging.getLogger(__name__)


# ==== 构件 ====
def gadget_join(g1: WeightedGraph, g2: WeightedGraph) -> WeightedGraph:
    """节点依次为 G1、G2、v_1、v_2；v_i 连向 G_i 的全部节点并带自环，新增权均为 1。"""
    m1, m2 = g1.m, g2.m
    size = m1 + m2 + 2
    v1, v2 = m1 + m2, m1 + m2 + 1
    beta = [[Fraction(0)] * size for _ in range(size)]
    for i in g1.nodes:
        for j in g1.nodes:
            beta[i][j] = g1.beta[i][j]
        beta[v1][i] = beta[i][v1] = Fraction(1)
    for i in g2.nodes:
        for j in g2.nodes:
            beta[m1 + i][m1 + j] = g2.beta[i][j]
        beta[v2][m1 + i] = beta[m1 + i][v2] = Fraction(1)
    beta[v1][v1] = beta[v2][v2] = Fraction(1)
    alpha = g1.alpha + g2.alpha + (Fraction(1), Fraction(1))
    return WeightedGraph(alpha=alpha, beta=tuple(tuple(row) for row in beta))


def gadget_apexes(g1: WeightedGraph, g2: WeightedGraph) -> Tuple[int, int]:
    return g1.m + g2.m, g1.m + g2.m + 1


def isomorphism_via_gadget(g1: WeightedGraph, g2: WeightedGraph) -> Optional[Permutation]:
    """构件上把 v_1 送到 v_2 的自同构限制到 G1 上即为 G1 → G2 的同构。"""
    if g1.m != g2.m:
        return None
    gadget = gadget_join(g1, g2)
    v1, v2 = gadget_apexes(g1, g2)
    for sigma in iter_isomorphisms(gadget, gadget, pinned={v1: v2}):
        images = [sigma(i) - g1.m for i in g1.nodes]
        if all(0 <= t < g2.m for t in images):
            witness = Permutation(images=tuple(images))
            if not is_isomorphism(witness, g1, g2):
                raise BusinessException("构件自同构的限制不是同构")
            return witness
    return None


def _remove_nodes(pattern: KLabeledGraph, removed: Sequence[int]) -> KLabeledGraph:
    """删去给定节点及其关联边，剩余节点按原顺序重新编号为 0 标号图。"""
    gone = set(removed)
    keep = [u for u in range(pattern.n) if u not in gone]
    index = {u: i for i, u in enumerate(keep)}
    edges = tuple((index[u], index[v], mult) for u, v, mult in pattern.edges if u in index and v in index)
    return KLabeledGraph(k=0, n=len(keep), edges=edges)


def gadget_decomposition_value(pattern: KLabeledGraph, graph: WeightedGraph) -> Fraction:
    """连通 1 标号 F：Σ_{S ∋ 标号节点} hom(F − S, G1)，S 为映到 v_1 的节点集合。"""
    if pattern.k != 1 or not is_connected(pattern):
        raise ValidationException("构件分解只适用于连通的 1 标号图")
    unlabeled = range(1, pattern.n)
    total = Fraction(0)
    for size in range(pattern.n):
        for extra in combinations(unlabeled, size):
            total += hom(_remove_nodes(pattern, (0,) + extra), graph)
    return total


def verify_gadget_symmetry(
    g1: WeightedGraph,
    g2: WeightedGraph,
    patterns: Optional[GraphCatalog] = None,
) -> GadgetReport:
    """对连通 1 标号模式核对 hom_{v_1}(F, 构件) == hom_{v_2}(F, 构件)，并与分解公式对照。"""
    if patterns is None:
        patterns = simple_patterns(settings.GHA_PATTERN_MAX_NODES, connected_only=True, k=1)
    if patterns.k != 1:
        raise ValidationException("构件校验需要 1 标号模式")
    gadget = gadget_join(g1, g2)
    v1, v2 = gadget_apexes(g1, g2)
    connected = [p for p in patterns if is_connected(p)]
    mismatches = []
    decomposition = []
    for pattern in connected:
        at_v1 = hom_partial(pattern, gadget, (v1,))
        if at_v1 != hom_partial(pattern, gadget, (v2,)):
            mismatches.append(pattern)
        if at_v1 != gadget_decomposition_value(pattern, g1):
            decomposition.append(pattern)
    twin_free = find_twins(gadget).is_discrete
    if not twin_free:
        logger.warning("gadget has twins; quotient before invoking the equivalence lemma")
    return GadgetReport(
        patterns=len(connected),
        mismatches=tuple(mismatches),
        decomposition_mismatches=tuple(decomposition),
        gadget_twin_free=twin_free,
    )


# ==== 同态轮廓 ====
def _profile_entry(args: Tuple[KLabeledGraph, WeightedGraph]) -> Fraction:
    pattern, graph = args
    return hom(pattern, graph)


def pattern_catalog(max_pattern_nodes: Optional[int] = None) -> GraphCatalog:
    return simple_patterns(settings.GHA_PATTERN_MAX_NODES if max_pattern_nodes is None else max_pattern_nodes)


def hom_profile(graph: WeightedGraph, catalog: GraphCatalog, *, jobs: Optional[int] = None) -> List[Fraction]:
    """(hom(F, G))_F，按目录顺序。"""
    if catalog.k != 0 or not all(p.is_simple for p in catalog):
        raise ValidationException("同态轮廓只接受 0 标号简单图目录")
    return parallel_map(_profile_entry, [(pattern, graph) for pattern in catalog], jobs)


def _first_difference(p1: Sequence[Fraction], p2: Sequence[Fraction]) -> Optional[int]:
    return next((i for i, (a, b) in enumerate(zip(p1, p2)) if a != b), None)


def _distinguished(pattern: KLabeledGraph, g1: WeightedGraph, g2: WeightedGraph) -> IsoVerdict:
    values = (hom(pattern, g1), hom(pattern, g2))
    if values[0] == values[1]:
        raise BusinessException("区分模式在原图上的 hom 值相同")
    return IsoVerdict(verdict=Verdict.DISTINGUISHED, pattern=pattern, values=values)


def _search_witness(g1: WeightedGraph, g2: WeightedGraph) -> Optional[Permutation]:
    witness = find_isomorphism(g1, g2)
    if witness is not None and not is_isomorphism(witness, g1, g2):
        raise BusinessException("同构搜索返回的置换不保权")
    return witness


def decide_isomorphic(
    g1: WeightedGraph,
    g2: WeightedGraph,
    max_pattern_nodes: Optional[int] = None,
    *,
    jobs: Optional[int] = None,
) -> IsoVerdict:
    """先比较轮廓（在孪生商图上计算，hom 值不变），再做显式同构搜索。"""
    catalog = pattern_catalog(max_pattern_nodes)
    q1, q2 = twin_quotient(g1), twin_quotient(g2)
    index = _first_difference(hom_profile(q1, catalog, jobs=jobs), hom_profile(q2, catalog, jobs=jobs))
    if index is not None:
        return _distinguished(catalog[index], g1, g2)
    witness = _search_witness(g1, g2)
    if witness is not None:
        return IsoVerdict(verdict=Verdict.ISOMORPHIC, permutation=witness)
    logger.info("profiles agree on %d patterns but no isomorphism found", len(catalog))
    return IsoVerdict(verdict=Verdict.INCONCLUSIVE, bounds=catalog.bounds)


def distinguish_all(
    graphs: Sequence[WeightedGraph],
    max_pattern_nodes: Optional[int] = None,
    *,
    jobs: Optional[int] = None,
) -> DistinguishReport:
    """两两判定；轮廓相同而找不到同构的对把模式上界加一后重判。"""
    bound = settings.GHA_PATTERN_MAX_NODES if max_pattern_nodes is None else max_pattern_nodes
    catalog = pattern_catalog(bound)
    profiles: Dict[int, List[Fraction]] = {i: hom_profile(g, catalog, jobs=jobs) for i, g in enumerate(graphs)}
    pairs = []
    for i, j in combinations(range(len(graphs)), 2):
        index = _first_difference(profiles[i], profiles[j])
        if index is not None:
            pairs.append(PairVerdict(i, j, _distinguished(catalog[index], graphs[i], graphs[j]), bound))
            continue
        witness = _search_witness(graphs[i], graphs[j])
        if witness is not None:
            pairs.append(PairVerdict(i, j, IsoVerdict(verdict=Verdict.ISOMORPHIC, permutation=witness), bound))
            continue
        logger.warning("pair (%d, %d) undistinguished at %d pattern nodes; escalating", i, j, bound)
        pairs.append(PairVerdict(i, j, decide_isomorphic(graphs[i], graphs[j], bound + 1, jobs=jobs), bound + 1))
    report = DistinguishReport(pairs=tuple(pairs))
    logger.info(
        "distinguish_all: %d graphs, %d distinguished, %d isomorphic, %d inconclusive",
        len(graphs),
        report.count(Verdict.DISTINGUISHED),
        report.count(Verdict.ISOMORPHIC),
        report.count(Verdict.INCONCLUSIVE),
    )
    return report


__all__ = [
    "gadget_join",
    "gadget_apexes",
    "isomorphism_via_gadget",
    "gadget_decomposition_value",
    "verify_gadget_symmetry",
    "pattern_catalog",
    "hom_profile",
    "decide_isomorphic",
    "distinguish_all",
]
