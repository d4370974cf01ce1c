"""图代数 𝒢ₖ → 𝒜ₖ 的同态 f_k、两种内积、迹算子、映射等价划分与幂等基，
以及秩定理、引理与闭包性质的逐项精确校验。

所有「等价」都相对于有限目录；校验只在取值与理论上界相遇时给出通过，
有限目录上的不一致在未认证时报告为 inconclusive，而不是失败。
"""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from django.conf import settings
from faker import Faker

from apps.connection.services import (
    build_M,
    build_N,
    rank_exact,
    rank_of_vectors,
    stabilized_rank,
    verify_factorization,
)
from apps.core.api.exceptions import ValidationException
from apps.core.utils.time_utils import duration_ms, now
from apps.graph.model import CatalogBounds, Escalation, GraphCatalog, KLabeledGraph, QuantumGraph, WeightedGraph
from apps.graph.selectors import catalog_for, default_ladder, simple_patterns, sized_catalog
from apps.graph.services import escalate, glue, quantum_product, trace_graph
from apps.hom.selectors import iter_maps, map_index
from apps.hom.services import alpha_weight, hom_quantum, hom_vector
from apps.symmetry.model import TuplePartition
from apps.symmetry.services import (
    automorphisms,
    ensure_twin_free,
    orbit_count,
    orbit_partition,
    quotient_hom_mismatches,
    reduce_twins,
    twin_quotient,
    verify_twin_free_rigidity,
)

from .model import AlgebraVector, CheckReport, CheckStatus, SuiteReport

logger = logging.getLogger(__name__)

LadderFor = Callable[[int], Sequence[CatalogBounds]]
QuantumLike = Union[QuantumGraph, KLabeledGraph]


def _as_quantum(x: QuantumLike) -> QuantumGraph:
    return QuantumGraph.of(x) if isinstance(x, KLabeledGraph) else x


def _ensure_compatible(x: AlgebraVector, y: AlgebraVector) -> None:
    if (x.k, x.m) != (y.k, y.m):
        raise ValidationException(f"向量维数不一致：(k={x.k}, m={x.m}) vs (k={y.k}, m={y.m})")


def _ensure_target(x: AlgebraVector, graph: WeightedGraph) -> None:
    if x.m != graph.m:
        raise ValidationException(f"向量按 m={x.m} 个节点索引，目标图有 {graph.m} 个节点")


# ==== 𝒢ₖ 与 𝒜ₖ ====
def f_k(pattern: KLabeledGraph, graph: WeightedGraph) -> AlgebraVector:
    """f_k(F) = Σ_φ hom_φ(F, G)·φ。"""
    return AlgebraVector(k=pattern.k, m=graph.m, values=hom_vector(pattern, graph))


def f_k_quantum(x: QuantumGraph, graph: WeightedGraph) -> AlgebraVector:
    acc = AlgebraVector.zero(x.k, graph.m)
    for term, coeff in x.terms:
        acc = acc + f_k(term, graph).scale(coeff)
    return acc


def algebra_product(x: AlgebraVector, y: AlgebraVector) -> AlgebraVector:
    """φ*ψ = δ_φψ·φ 的双线性扩张，即逐项乘积。"""
    _ensure_compatible(x, y)
    return AlgebraVector(x.k, x.m, tuple(a * b for a, b in zip(x.values, y.values)))


def inner_product_G(x: QuantumLike, y: QuantumLike, graph: WeightedGraph) -> Fraction:
    """⟨x, y⟩ = f(xy) = hom(xy, G)。"""
    return hom_quantum(quantum_product(_as_quantum(x), _as_quantum(y)), graph)


def inner_product_A(x: AlgebraVector, y: AlgebraVector, graph: WeightedGraph) -> Fraction:
    """Σ_φ α_φ·x(φ)·y(φ)。"""
    _ensure_compatible(x, y)
    _ensure_target(x, graph)
    total = Fraction(0)
    for phi, a, b in zip(iter_maps(graph.m, x.k), x.values, y.values):
        if a and b:
            total += alpha_weight(phi, graph) * a * b
    return total


def trace_A(x: AlgebraVector, graph: WeightedGraph) -> AlgebraVector:
    """结果在 φ′ 处为 Σ_c α_c·x(φ′c)；字典序下 φ′c 的下标为 idx(φ′)·m + c。"""
    if x.k < 1:
        raise ValidationException("0 阶向量没有迹")
    _ensure_target(x, graph)
    m = x.m
    values = tuple(
        sum((graph.alpha[c] * x.values[i * m + c] for c in range(m)), Fraction(0)) for i in range(m ** (x.k - 1))
    )
    return AlgebraVector(k=x.k - 1, m=m, values=values)


# ==== 商空间与等价划分 ====
def quotient_dimension(k: int, graph: WeightedGraph, catalog: GraphCatalog) -> int:
    """dim span{f_k(F) : F ∈ catalog}。"""
    if catalog.k != k:
        raise ValidationException(f"目录标号数 {catalog.k} 与 k={k} 不一致")
    return rank_of_vectors([f_k(pattern, graph).values for pattern in catalog])


def equivalence_partition(
    k: int, graph: WeightedGraph, catalog: GraphCatalog, *, jobs: Optional[int] = None
) -> TuplePartition:
    """两个映射同块当且仅当它们在 N 中的行在全部目录列上相同。"""
    n_matrix = build_N(k, graph, catalog, jobs=jobs)
    groups: Dict[Tuple[Fraction, ...], List[Tuple[int, ...]]] = {}
    for label, row in zip(n_matrix.row_labels, n_matrix.entries):
        groups.setdefault(row, []).append(label.targets)
    return TuplePartition.from_groups(k, graph.m, groups.values())


def idempotents_of(partition: TuplePartition) -> List[AlgebraVector]:
    """w_i = Σ_{ψ∈Ψ_i} ψ。"""
    return [AlgebraVector.indicator(partition.k, partition.m, block) for block in partition.blocks]


def idempotent_basis(
    k: int, graph: WeightedGraph, catalog: GraphCatalog, *, jobs: Optional[int] = None
) -> List[AlgebraVector]:
    return idempotents_of(equivalence_partition(k, graph, catalog, jobs=jobs))


def idempotent_violations(basis: Sequence[AlgebraVector]) -> List[str]:
    """核对 w_i w_j == δ_ij w_i 与 Σ w_i == u_k，返回违规描述。"""
    if not basis:
        return ["幂等基为空"]
    k, m = basis[0].k, basis[0].m
    problems = []
    for i, wi in enumerate(basis):
        for j, wj in enumerate(basis):
            expected = wi if i == j else AlgebraVector.zero(k, m)
            if algebra_product(wi, wj) != expected:
                problems.append(f"w_{i}·w_{j}")
    total = AlgebraVector.zero(k, m)
    for w in basis:
        total = total + w
    if total != AlgebraVector.unit(k, m):
        problems.append("Σw_i != u_k")
    return problems


def stabilized_partition(
    k: int,
    graph: WeightedGraph,
    ladder: Optional[Sequence[CatalogBounds]] = None,
    *,
    target: Optional[TuplePartition] = None,
    jobs: Optional[int] = None,
) -> Escalation[TuplePartition]:
    return escalate(
        k,
        ladder or default_ladder(k),
        lambda catalog: equivalence_partition(k, graph, catalog, jobs=jobs),
        target=target,
    )


def _closure_status(violations: int, certified: bool) -> CheckStatus:
    if not violations:
        return CheckStatus.PASS
    return CheckStatus.FAIL if certified else CheckStatus.INCONCLUSIVE


# ==== 定理与引理 ====
def verify_theorem(
    k: int,
    graph: WeightedGraph,
    ladder: Optional[Sequence[CatalogBounds]] = None,
    *,
    jobs: Optional[int] = None,
) -> CheckReport:
    """升级目录直到 rk(N) 达到 orb_k 或稳定；有孪生时先取商图。"""
    started = now()
    reduced = twin_quotient(graph)
    orb = orbit_count(reduced, k)
    escalation = stabilized_rank(k, reduced, ladder or default_ladder(k), target=orb, jobs=jobs)
    rank = escalation.value
    if rank > orb or orb > reduced.m**k:
        status, message = CheckStatus.FAIL, f"秩 {rank} 超过 orb_k={orb} 或 m^k={reduced.m ** k}"
    elif rank == orb:
        status, message = CheckStatus.PASS, f"rank == orb_k == {orb}"
    else:
        status, message = CheckStatus.INCONCLUSIVE, f"在上界 {escalation.bounds} 处秩 {rank} < orb_k {orb}"
    logger.info("verify_theorem k=%d m=%d rank=%d orb=%d in %dms", k, reduced.m, rank, orb, duration_ms(started))
    return CheckReport(
        name="theorem",
        status=status,
        message=message,
        rank=rank,
        orb=orb,
        equal=rank == orb,
        bounds=escalation.bounds,
        escalations=escalation.escalations,
        details={
            "m": reduced.m,
            "catalog_size": escalation.catalog_size,
            "certified": escalation.certified,
            "stabilized": escalation.stabilized,
            "quotiented": reduced is not graph,
        },
    )


def verify_homeq(
    k: int,
    graph: WeightedGraph,
    ladder: Optional[Sequence[CatalogBounds]] = None,
    *,
    jobs: Optional[int] = None,
) -> CheckReport:
    """稳定后的等价划分与 Aut(G) 轨道划分逐块相同；不同只报告 inconclusive。"""
    ensure_twin_free(graph)
    orbits = orbit_partition(graph, k)
    escalation = stabilized_partition(k, graph, ladder, target=orbits, jobs=jobs)
    partition = escalation.value
    if not orbits.refines(partition):
        status, message = CheckStatus.FAIL, "同一轨道内的映射落入不同等价类"
    elif partition == orbits:
        status, message = CheckStatus.PASS, f"{len(orbits)} 个等价类与轨道逐块相同"
    else:
        status = CheckStatus.INCONCLUSIVE
        message = f"在上界 {escalation.bounds} 处等价类 {len(partition)} 个，轨道 {len(orbits)} 个"
    return CheckReport(
        name="homeq",
        status=status,
        message=message,
        orb=len(orbits),
        equal=partition == orbits,
        bounds=escalation.bounds,
        escalations=escalation.escalations,
        details={"classes": len(partition), "catalog_size": escalation.catalog_size},
    )


def verify_homrep(
    k: int,
    graph: WeightedGraph,
    ladder: Optional[Sequence[CatalogBounds]] = None,
    *,
    jobs: Optional[int] = None,
) -> CheckReport:
    """(a) N 的每一列在自同构下不变；(b) 稳定后的列空间维数等于 orb_k。"""
    group = automorphisms(graph)
    orb = orbit_count(graph, k)
    escalation = stabilized_rank(k, graph, ladder or default_ladder(k), target=orb, jobs=jobs)
    n_matrix = build_N(k, graph, catalog_for(k, escalation.bounds), jobs=jobs)
    broken = 0
    for sigma in group:
        if sigma.is_identity:
            continue
        for i, label in enumerate(n_matrix.row_labels):
            if n_matrix.entries[i] != n_matrix.entries[map_index(sigma.act(label.targets), graph.m)]:
                broken += 1
    rank = escalation.value
    if broken or rank > orb:
        status, message = CheckStatus.FAIL, f"{broken} 行在自同构作用下改变"
    elif rank == orb:
        status, message = CheckStatus.PASS, f"列空间维数 {rank} == orb_k"
    else:
        status, message = CheckStatus.INCONCLUSIVE, f"在上界 {escalation.bounds} 处维数 {rank} < orb_k {orb}"
    return CheckReport(
        name="homrep",
        status=status,
        message=message,
        rank=rank,
        orb=orb,
        equal=rank == orb,
        bounds=escalation.bounds,
        escalations=escalation.escalations,
        details={"automorphisms": len(group), "non_invariant_rows": broken},
    )


def factorization_report(
    k: int, graph: WeightedGraph, catalog: GraphCatalog, *, jobs: Optional[int] = None
) -> CheckReport:
    """M == NᵀAN 逐项成立且 rk(M) == rk(N)。"""
    ok = verify_factorization(k, graph, catalog, jobs=jobs)
    rank_n = rank_exact(build_N(k, graph, catalog, jobs=jobs))
    rank_m = rank_exact(build_M(k, graph, catalog, jobs=jobs))
    passed = ok and rank_n == rank_m
    return CheckReport(
        name="factorization",
        status=CheckStatus.PASS if passed else CheckStatus.FAIL,
        message="M == NᵀAN，半正定" if passed else "分解或秩不一致",
        rank=rank_n,
        equal=rank_n == rank_m,
        details={"catalog_size": len(catalog), "rank_N": rank_n, "rank_M": rank_m, "identity": ok},
    )


def verify_algebra_identities(
    k: int,
    graph: WeightedGraph,
    catalog: GraphCatalog,
    *,
    pairs: Optional[int] = None,
    seed: Optional[int] = None,
) -> CheckReport:
    """随机目录对上的代数同态与内积保持、逐图的迹相容，以及幂等基恒等式。"""
    pairs = settings.GHA_ALGEBRA_PAIRS if pairs is None else pairs
    seed = settings.GHA_ALGEBRA_SEED if seed is None else seed
    faker = Faker()
    faker.seed_instance(seed)
    failures = {"homomorphism": 0, "inner_product": 0, "trace": 0, "idempotent": 0}

    size = len(catalog)
    for _ in range(pairs if size else 0):
        f1 = catalog[faker.random_int(min=0, max=size - 1)]
        f2 = catalog[faker.random_int(min=0, max=size - 1)]
        v1, v2 = f_k(f1, graph), f_k(f2, graph)
        if f_k(glue(f1, f2), graph) != algebra_product(v1, v2):
            failures["homomorphism"] += 1
        if inner_product_G(f1, f2, graph) != inner_product_A(v1, v2, graph):
            failures["inner_product"] += 1

    if k >= 1:
        for pattern in catalog:
            if trace_A(f_k(pattern, graph), graph) != f_k(trace_graph(pattern), graph):
                failures["trace"] += 1

    basis = idempotents_of(equivalence_partition(k, graph, catalog))
    failures["idempotent"] = len(idempotent_violations(basis))

    failed = sum(failures.values())
    return CheckReport(
        name="algebra",
        status=CheckStatus.FAIL if failed else CheckStatus.PASS,
        message=f"{failed} 项恒等式不成立" if failed else "全部恒等式精确成立",
        details={"pairs": pairs, "catalog_size": size, "idempotents": len(basis), "failures": failures},
    )


# ==== 闭包性质 ====
def verify_restriction_closure(
    k: int,
    graph: WeightedGraph,
    *,
    ladder_for: LadderFor = default_ladder,
    jobs: Optional[int] = None,
) -> CheckReport:
    """等价的 k 映射去掉最后一个标号后仍等价：每个 k 级块的限制落在同一个 (k-1) 级块内。"""
    if k < 1:
        raise ValidationException("限制闭包需要 k ≥ 1")
    upper = stabilized_partition(k, graph, ladder_for(k), target=orbit_partition(graph, k), jobs=jobs)
    lower = stabilized_partition(k - 1, graph, ladder_for(k - 1), target=orbit_partition(graph, k - 1), jobs=jobs)
    index = lower.value.block_of()
    violations = [block for block in upper.value.blocks if len({index[phi[:-1]] for phi in block}) > 1]
    certified = upper.certified and lower.certified
    return CheckReport(
        name="restriction",
        status=_closure_status(len(violations), certified),
        message=f"{len(violations)} 个块的限制跨越多个等价类",
        bounds=upper.bounds,
        escalations=upper.escalations,
        details={"violations": len(violations), "certified": certified},
    )


def verify_extension_closure(
    k: int,
    graph: WeightedGraph,
    *,
    ladder_for: LadderFor = default_ladder,
    jobs: Optional[int] = None,
) -> CheckReport:
    """等价的 φ、ψ：φ 的每个扩张 μ 都有 ψ 的某个扩张 ν 与之等价，即两者扩张所达的块集合相同。"""
    rows = graph.m ** (k + 1)
    if rows > settings.GHA_CLOSURE_MAX_ROWS:
        raise ValidationException(f"m^(k+1)={rows} 超过扩张闭包的上限 {settings.GHA_CLOSURE_MAX_ROWS}")
    level = stabilized_partition(k, graph, ladder_for(k), target=orbit_partition(graph, k), jobs=jobs)
    upper = stabilized_partition(k + 1, graph, ladder_for(k + 1), target=orbit_partition(graph, k + 1), jobs=jobs)
    index = upper.value.block_of()
    violations = []
    for block in level.value.blocks:
        reached = {frozenset(index[phi + (c,)] for c in graph.nodes) for phi in block}
        if len(reached) > 1:
            violations.append(block)
    certified = level.certified and upper.certified
    return CheckReport(
        name="extension",
        status=_closure_status(len(violations), certified),
        message=f"{len(violations)} 个块的扩张不对应",
        bounds=upper.bounds,
        escalations=upper.escalations,
        details={"violations": len(violations), "certified": certified},
    )


def verify_identity_block(
    graph: WeightedGraph,
    *,
    ladder_for: LadderFor = default_ladder,
    jobs: Optional[int] = None,
) -> CheckReport:
    """k = m 时与恒等映射等价的每个映射都保持 α 与 β（因而是自同构）。"""
    m = graph.m
    if m > 3:
        raise ValidationException(f"恒等块校验只在 m ≤ 3 时运行，当前 m={m}")
    ensure_twin_free(graph)
    escalation = stabilized_partition(m, graph, ladder_for(m), target=orbit_partition(graph, m), jobs=jobs)
    identity = tuple(range(m))
    block = next(b for b in escalation.value.blocks if identity in b)
    bad = [
        psi
        for psi in block
        if any(graph.alpha[psi[i]] != graph.alpha[i] for i in range(m))
        or any(graph.beta[psi[i]][psi[j]] != graph.beta[i][j] for i in range(m) for j in range(m))
    ]
    return CheckReport(
        name="identity_block",
        status=_closure_status(len(bad), escalation.certified),
        message=f"恒等映射的等价类含 {len(block)} 个映射，{len(bad)} 个不保权",
        bounds=escalation.bounds,
        escalations=escalation.escalations,
        details={"block_size": len(block), "violations": len(bad), "certified": escalation.certified},
    )


def rigidity_report(graph: WeightedGraph) -> CheckReport:
    ok = verify_twin_free_rigidity(graph)
    return CheckReport(
        name="rigidity",
        status=CheckStatus.PASS if ok else CheckStatus.FAIL,
        message="所有保 β 自映射均为双射" if ok else "存在非双射的保 β 自映射",
        details={"m": graph.m},
    )


def twins_report(graph: WeightedGraph, blocks: Sequence[Sequence[int]]) -> CheckReport:
    """孪生商图在小目录上保持全部 hom 值。"""
    twin_free = all(len(b) == 1 for b in blocks)
    mismatches = [] if twin_free else quotient_hom_mismatches(graph, simple_patterns(settings.GHA_PATTERN_MAX_NODES))
    return CheckReport(
        name="twins",
        status=CheckStatus.FAIL if mismatches else CheckStatus.PASS,
        message="无孪生" if twin_free else f"孪生类 {[list(b) for b in blocks if len(b) > 1]}，商图保持 hom",
        details={"blocks": [list(b) for b in blocks], "hom_mismatches": len(mismatches)},
    )


# ==== 全套校验 ====
def run_suite(
    graph: WeightedGraph,
    k: int,
    *,
    strict: bool = False,
    jobs: Optional[int] = None,
    ladder_for: LadderFor = default_ladder,
) -> SuiteReport:
    """verify 命令的完整校验组；有孪生时先取商图（strict 时拒绝）。"""
    if k < 0:
        raise ValidationException("k 不能为负")
    started = now()
    reduced, partition = reduce_twins(graph, strict=strict)
    notices: List[str] = []
    skipped: List[str] = []
    if not partition.is_discrete:
        notices.append(f"twins {[list(b) for b in partition.nontrivial()]}; quotient applied")

    head = sized_catalog(k, settings.GHA_FACTORIZATION_SIZE)
    checks = [
        twins_report(graph, partition.blocks),
        factorization_report(k, graph, head, jobs=jobs),
        verify_theorem(k, reduced, ladder_for(k), jobs=jobs),
        verify_homrep(k, reduced, ladder_for(k), jobs=jobs),
        verify_homeq(k, reduced, ladder_for(k), jobs=jobs),
        verify_algebra_identities(k, reduced, head),
    ]
    if k >= 1:
        checks.append(verify_restriction_closure(k, reduced, ladder_for=ladder_for, jobs=jobs))
    if reduced.m ** (k + 1) <= settings.GHA_CLOSURE_MAX_ROWS:
        checks.append(verify_extension_closure(k, reduced, ladder_for=ladder_for, jobs=jobs))
    else:
        skipped.append("extension")
    if reduced.m <= settings.GHA_RIGIDITY_MAX_NODES:
        checks.append(rigidity_report(reduced))
    else:
        skipped.append("rigidity")
    if reduced.m <= 3:
        checks.append(verify_identity_block(reduced, ladder_for=ladder_for, jobs=jobs))
    else:
        skipped.append("identity_block")

    report = SuiteReport(
        k=k,
        m=reduced.m,
        checks=tuple(checks),
        notices=tuple(notices),
        skipped=tuple(skipped),
        twin_blocks=partition.blocks,
    )
    logger.info("run_suite k=%d m=%d status=%s in %dms", k, reduced.m, report.status.value, duration_ms(started))
    return report


__all__ = [
    "f_k",
    "f_k_quantum",
    "algebra_product",
    "inner_product_G",
    "inner_product_A",
    "trace_A",
    "quotient_dimension",
    "equivalence_partition",
    "idempotents_of",
    "idempotent_basis",
    "idempotent_violations",
    "stabilized_partition",
    "verify_theorem",
    "verify_homeq",
    "verify_homrep",
    "factorization_report",
    "verify_algebra_identities",
    "verify_restriction_closure",
    "verify_extension_closure",
    "verify_identity_block",
    "rigidity_report",
    "twins_report",
    "run_suite",
]
