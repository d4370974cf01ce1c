"""gha enumerate"""
from apps.graph.model import CatalogBounds
from apps.graph.selectors import catalog_for

from ...base import GraphCommand
from ...schemas import OutputFormat
from ...services import render_catalog


class Command(GraphCommand):
    help = "列出给定上界内同构去重的 k 标号多重图目录"
    verb = "enumerate"
    default_format = OutputFormat.TEXT
    uses_bounds = True

    def add_verb_arguments(self, parser):
        parser.add_argument("--simple", action="store_true", help="只列简单图（等价于 --max-mult 1）")

    def run(self, config, options):
        bounds = config.bounds()
        if options.get("simple"):
            bounds = CatalogBounds(bounds.max_nodes, bounds.max_total_edges, 1)
        return render_catalog(catalog_for(config.k, bounds), config.format)
