"""命令行的输入解析与输出渲染。输出只依赖输入与选项，字节级确定。"""
from __future__ import annotations

import csv
import io
import json
import logging
from pathlib import Path
from typing import Any, Iterable, List, Sequence, Tuple, Type, TypeVar

from pydantic import ValidationError

from apps.algebra.model import SuiteReport
from apps.algebra.schemas import SuiteReportSchema
from apps.core.api.exceptions import ValidationException
from apps.core.utils.serializers import dumps
from apps.graph.model import GraphCatalog, KLabeledGraph, WeightedGraph
from apps.graph.schemas import GraphCatalogSchema, KLabeledGraphSchema, WeightedGraphSchema
from apps.homdet.model import IsoVerdict
from apps.homdet.schemas import IsoVerdictSchema
from apps.symmetry.model import NodePartition, TuplePartition

from .schemas import OutputFormat

logger = logging.getLogger(__name__)

S = TypeVar("S", WeightedGraphSchema, KLabeledGraphSchema)


# ==== 输入 ====
def _load_schema(path: str, schema: Type[S]) -> S:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ValidationException(f"{path}: 无法读取文件（{exc.strerror}）")
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationException(f"{path}:{exc.lineno}:{exc.colno}: JSON 格式错误：{exc.msg}")
    try:
        return schema.model_validate(raw)
    except ValidationError as exc:
        first = exc.errors()[0]
        location = ".".join(str(part) for part in first.get("loc", ()))
        raise ValidationException(f"{path}: 字段 {location or '<root>'} 无效：{first.get('msg')}")


def load_weighted_graph(path: str) -> WeightedGraph:
    graph = _load_schema(path, WeightedGraphSchema).to_domain()
    logger.debug("loaded target %s with m=%d", path, graph.m)
    return graph


def load_k_labeled_graph(path: str) -> KLabeledGraph:
    return _load_schema(path, KLabeledGraphSchema).to_domain()


def parse_phi(text: str) -> Tuple[int, ...]:
    """"0,2,1" → (0, 2, 1)；空串表示 k = 0 的空映射。"""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValidationException(f"--phi 应为逗号分隔的 0 起始节点编号，收到 {text!r}")


# ==== 输出 ====
def _csv(rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue().rstrip("\n")


def _block_text(block: Sequence[Any]) -> str:
    return "{" + ",".join(str(v) if not isinstance(v, tuple) else "(" + ",".join(map(str, v)) + ")" for v in block) + "}"


def render_scalar(name: str, value: str, fmt: OutputFormat) -> str:
    if fmt is OutputFormat.JSON:
        return dumps({name: value})
    if fmt is OutputFormat.CSV:
        return _csv([[name], [value]])
    return value


def render_node_partition(partition: NodePartition, fmt: OutputFormat) -> str:
    blocks = [list(b) for b in partition.blocks]
    if fmt is OutputFormat.JSON:
        return dumps({"blocks": blocks, "twin_free": partition.is_discrete})
    if fmt is OutputFormat.CSV:
        return _csv([["block", "node"]] + [[i, v] for i, block in enumerate(blocks) for v in block])
    return " ".join(_block_text(b) for b in partition.blocks)


def render_tuple_partition(partition: TuplePartition, fmt: OutputFormat) -> str:
    if fmt is OutputFormat.JSON:
        blocks = [[list(phi) for phi in block] for block in partition.blocks]
        return dumps({"orbits": len(partition), "partition": blocks})
    if fmt is OutputFormat.CSV:
        rows: List[List[Any]] = [["block", "map"]]
        rows += [[i, " ".join(map(str, phi))] for i, block in enumerate(partition.blocks) for phi in block]
        return _csv(rows)
    return str(len(partition))


def render_weighted_graph(graph: WeightedGraph, fmt: OutputFormat) -> str:
    schema = WeightedGraphSchema.from_domain(graph)
    if fmt is OutputFormat.CSV:
        rows = [["alpha"] + schema.alpha] + [[f"beta[{i}]"] + row for i, row in enumerate(schema.beta)]
        return _csv(rows)
    return dumps(schema)


def render_catalog(catalog: GraphCatalog, fmt: OutputFormat) -> str:
    if fmt is OutputFormat.JSON:
        return dumps(GraphCatalogSchema.from_domain(catalog))
    if fmt is OutputFormat.CSV:
        rows: List[List[Any]] = [["index", "k", "n", "edges"]]
        rows += [[i, g.k, g.n, " ".join(f"{u}-{v}x{m}" for u, v, m in g.edges)] for i, g in enumerate(catalog)]
        return _csv(rows)
    lines = [str(len(catalog))]
    lines += [f"n={g.n} edges={[list(e) for e in g.edges]}" for g in catalog]
    return "\n".join(lines)


def render_suite(report: SuiteReport, fmt: OutputFormat) -> str:
    schema = SuiteReportSchema.from_domain(report)
    if fmt is OutputFormat.JSON:
        return dumps(schema)
    if fmt is OutputFormat.CSV:
        rows: List[List[Any]] = [["check", "status", "rank", "orb", "message"]]
        rows += [[c.name, c.status, c.rank if c.rank is not None else "", c.orb if c.orb is not None else "", c.message] for c in schema.checks]
        return _csv(rows)
    lines = [f"{c.name}: {c.status}" + (f" ({c.message})" if c.message else "") for c in schema.checks]
    lines.append(f"overall: {schema.status}")
    return "\n".join(lines)


def render_verdict(verdict: IsoVerdict, fmt: OutputFormat) -> str:
    schema = IsoVerdictSchema.from_domain(verdict)
    if fmt is OutputFormat.JSON:
        return dumps(schema)
    witness = verdict.witness
    if verdict.permutation is not None:
        detail = " ".join(map(str, witness.images))
    elif verdict.pattern is not None:
        detail = f"n={witness.n} edges={[list(e) for e in witness.edges]} values={' '.join(schema.values)}"
    else:
        detail = f"max_nodes={witness.max_nodes}"
    if fmt is OutputFormat.CSV:
        return _csv([["verdict", "witness"], [schema.verdict, detail]])
    return f"{schema.verdict}: {detail}"


__all__ = [
    "load_weighted_graph",
    "load_k_labeled_graph",
    "parse_phi",
    "render_scalar",
    "render_node_partition",
    "render_tuple_partition",
    "render_weighted_graph",
    "render_catalog",
    "render_suite",
    "render_verdict",
]
