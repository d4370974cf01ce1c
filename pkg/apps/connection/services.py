"""连接矩阵截断 N(k,G)、A(k,G)、M(k,G) 的构造、分解校验与精确秩。

列（每个目录图一列 hom 向量）是并行单元；结果按目录顺序拼接，与并发度无关。
"""
from __future__ import annotations

import csv
import io
import logging
from fractions import Fraction
from math import gcd, lcm
from typing import List, Optional, Sequence, Tuple

from apps.core.api.exceptions import ValidationException
from apps.core.utils.parallel import parallel_map
from apps.core.utils.rationals import format_rational
from apps.core.utils.serializers import dumps
from apps.core.utils.time_utils import duration_ms, now
from apps.graph.model import CatalogBounds, Escalation, GraphCatalog, KLabeledGraph, WeightedGraph
from apps.graph.services import escalate, glue
from apps.hom.model import MapAssignment
from apps.hom.selectors import iter_maps
from apps.hom.services import alpha_weight, hom, hom_column

from .model import RationalMatrix

logger = logging.getLogger(__name__)


def _check_catalog(k: int, catalog: GraphCatalog) -> None:
    if catalog.k != k:
        raise ValidationException(f"目录标号数 {catalog.k} 与 k={k} 不一致")


def _glued_hom(args: Tuple[KLabeledGraph, KLabeledGraph, WeightedGraph]) -> Fraction:
    f1, f2, graph = args
    return hom(glue(f1, f2), graph)


def _map_labels(m: int, k: int) -> Tuple[MapAssignment, ...]:
    return tuple(MapAssignment(phi) for phi in iter_maps(m, k))


# ==== 矩阵构造 ====
def build_N(k: int, graph: WeightedGraph, catalog: GraphCatalog, *, jobs: Optional[int] = None) -> RationalMatrix:
    """行：字典序的映射 φ；列：目录图 F；元素 hom_φ(F, G)。"""
    _check_catalog(k, catalog)
    started = now()
    columns = parallel_map(hom_column, [(pattern, graph) for pattern in catalog], jobs)
    matrix = RationalMatrix.from_columns(
        columns,
        rows=graph.m**k,
        row_labels=_map_labels(graph.m, k),
        col_labels=tuple(range(len(catalog))),
    )
    logger.info("build_N k=%d shape=%s in %dms", k, matrix.shape, duration_ms(started))
    return matrix


def build_A(k: int, graph: WeightedGraph) -> RationalMatrix:
    """m^k 阶对角阵，行 φ 上的对角元为 α_φ。"""
    labels = _map_labels(graph.m, k)
    return RationalMatrix.diagonal([alpha_weight(phi, graph) for phi in labels], labels)


def build_M(k: int, graph: WeightedGraph, catalog: GraphCatalog, *, jobs: Optional[int] = None) -> RationalMatrix:
    """元素 (F1, F2) = hom(F1F2, G)；只计算上三角再对称填充。"""
    _check_catalog(k, catalog)
    started = now()
    size = len(catalog)
    pairs = [(i, j) for i in range(size) for j in range(i, size)]
    values = parallel_map(_glued_hom, [(catalog[i], catalog[j], graph) for i, j in pairs], jobs)
    grid = [[Fraction(0)] * size for _ in range(size)]
    for (i, j), value in zip(pairs, values):
        grid[i][j] = value
        grid[j][i] = value
    labels = tuple(range(size))
    matrix = RationalMatrix.from_rows(grid, cols=size, row_labels=labels, col_labels=labels)
    logger.info("build_M k=%d size=%d in %dms", k, size, duration_ms(started))
    return matrix


def verify_factorization(k: int, graph: WeightedGraph, catalog: GraphCatalog, *, jobs: Optional[int] = None) -> bool:
    """M == Nᵀ A N 逐项精确成立；A 为正对角阵，因此同时证明截断半正定。"""
    n_matrix = build_N(k, graph, catalog, jobs=jobs)
    a_matrix = build_A(k, graph)
    m_matrix = build_M(k, graph, catalog, jobs=jobs)
    product = n_matrix.T @ (a_matrix @ n_matrix)
    ok = m_matrix.same_entries(product)
    if not ok:
        logger.warning("factorization mismatch k=%d catalog=%d", k, len(catalog))
    return ok


# ==== 精确秩 ====
def _integer_rows(matrix: RationalMatrix) -> List[List[int]]:
    """逐行乘以分母的最小公倍数化为整数行（行缩放不改变秩），并丢弃零行。"""
    rows = []
    for row in matrix.entries:
        if not any(row):
            continue
        scale = lcm(*(v.denominator for v in row))
        rows.append([int(v * scale) for v in row])
    return rows


def _reduce(row: List[int]) -> List[int]:
    g = 0
    for v in row:
        if v:
            g = gcd(g, v)
    return [v // g for v in row] if g > 1 else row


def rank_exact(matrix: RationalMatrix) -> int:
    """无分数消元：消去行 i 时用 row_i·(p/g) - pivot·(c/g)，每行再除以内容 gcd。"""
    rows = _integer_rows(matrix)
    if not rows:
        return 0
    cols = matrix.cols
    rank = 0
    for column in range(cols):
        pivot_index = next((i for i in range(rank, len(rows)) if rows[i][column]), None)
        if pivot_index is None:
            continue
        rows[rank], rows[pivot_index] = rows[pivot_index], rows[rank]
        pivot = rows[rank]
        p = pivot[column]
        for i in range(rank + 1, len(rows)):
            c = rows[i][column]
            if c == 0:
                continue
            g = gcd(p, c)
            a, b = p // g, c // g
            rows[i] = _reduce([a * x - b * y for x, y in zip(rows[i], pivot)])
        rank += 1
        if rank == len(rows):
            break
    return rank


def rank_of_vectors(vectors: Sequence[Sequence[Fraction]]) -> int:
    """一组等长向量张成空间的维数。"""
    if not vectors:
        return 0
    return rank_exact(RationalMatrix.from_rows(vectors))


def connection_rank(k: int, graph: WeightedGraph, catalog: GraphCatalog, *, jobs: Optional[int] = None) -> int:
    """rk(N) 与 rk(M) 相同，而 N 只有 m^k 行，因此在 N 上消元。"""
    rank = rank_exact(build_N(k, graph, catalog, jobs=jobs))
    logger.info("connection_rank k=%d catalog=%d rank=%d", k, len(catalog), rank)
    return rank


def stabilized_rank(
    k: int,
    graph: WeightedGraph,
    ladder: Sequence[CatalogBounds],
    *,
    target: Optional[int] = None,
    jobs: Optional[int] = None,
) -> Escalation[int]:
    """沿阶梯升级目录直到秩达到 target（如 orb_k）、连续两次升级不变或到顶。"""
    return escalate(k, ladder, lambda catalog: connection_rank(k, graph, catalog, jobs=jobs), target=target)


# ==== 导出 ====
def _label_text(label) -> str:
    if isinstance(label, MapAssignment):
        return "(" + ",".join(str(t) for t in label.targets) + ")"
    return str(label)


def matrix_to_json(matrix: RationalMatrix) -> str:
    """{"rows", "cols", "entries": [["p/q", ...], ...], "row_labels", "col_labels"}。"""
    return dumps(
        {
            "rows": matrix.rows,
            "cols": matrix.cols,
            "entries": [[format_rational(v) for v in row] for row in matrix.entries],
            "row_labels": [_label_text(label) for label in matrix.row_labels],
            "col_labels": [_label_text(label) for label in matrix.col_labels],
        }
    )


def matrix_to_csv(matrix: RationalMatrix) -> str:
    """首行为列标签，每行首列为行标签（存在标签时）。"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    if matrix.col_labels:
        header = [""] if matrix.row_labels else []
        writer.writerow(header + [_label_text(label) for label in matrix.col_labels])
    for i, row in enumerate(matrix.entries):
        prefix = [_label_text(matrix.row_labels[i])] if matrix.row_labels else []
        writer.writerow(prefix + [format_rational(v) for v in row])
    return buffer.getvalue()


__all__ = [
    "build_N",
    "build_A",
    "build_M",
    "verify_factorization",
    "rank_exact",
    "rank_of_vectors",
    "connection_rank",
    "stabilized_rank",
    "matrix_to_json",
    "matrix_to_csv",
]
