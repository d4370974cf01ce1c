"""gha rank：有限目录上连接矩阵的精确秩，或导出 N / A / M。"""
from apps.connection.schemas import RankResultSchema
from apps.connection.services import build_A, build_M, build_N, connection_rank, matrix_to_csv, matrix_to_json
from apps.core.utils.serializers import dumps
from apps.graph.schemas import CatalogBoundsSchema
from apps.graph.selectors import catalog_for

from ...base import GraphCommand
from ...schemas import OutputFormat
from ...services import load_weighted_graph


class Command(GraphCommand):
    help = "计算 rk(M(k, G)) 在给定目录上界下的精确值"
    verb = "rank"
    default_format = OutputFormat.TEXT
    uses_bounds = True

    def add_verb_arguments(self, parser):
        parser.add_argument("target", help="加权目标图 JSON")
        parser.add_argument("--matrix", choices=["N", "A", "M"], default=None, help="改为导出指定矩阵")

    def inputs(self, options):
        return [options["target"]]

    def run(self, config, options):
        graph = load_weighted_graph(options["target"])
        bounds = config.bounds()
        which = options.get("matrix")
        if which == "A":
            matrix = build_A(config.k, graph)
        elif which:
            catalog = catalog_for(config.k, bounds)
            build = build_N if which == "N" else build_M
            matrix = build(config.k, graph, catalog, jobs=config.jobs)
        if which:
            return matrix_to_csv(matrix).rstrip("\n") if config.format is OutputFormat.CSV else matrix_to_json(matrix)

        catalog = catalog_for(config.k, bounds)
        rank = connection_rank(config.k, graph, catalog, jobs=config.jobs)
        if config.format is OutputFormat.TEXT:
            return str(rank)
        result = RankResultSchema(rank=rank, catalog_size=len(catalog), bounds=CatalogBoundsSchema.from_domain(bounds))
        if config.format is OutputFormat.CSV:
            return f"rank,catalog_size\n{rank},{len(catalog)}"
        return dumps(result)
