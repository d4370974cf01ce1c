"""gha orbits：Aut(G) 在 V(G)^k 上的轨道。"""
from apps.symmetry.services import orbit_partition

from ...base import GraphCommand
from ...schemas import OutputFormat
from ...services import load_weighted_graph, render_tuple_partition


class Command(GraphCommand):
    help = "计算 orb_k(G)；text 输出轨道数，json/csv 输出轨道划分"
    verb = "orbits"
    default_format = OutputFormat.TEXT

    def add_verb_arguments(self, parser):
        parser.add_argument("target", help="加权目标图 JSON")

    def inputs(self, options):
        return [options["target"]]

    def run(self, config, options):
        graph = load_weighted_graph(options["target"])
        return render_tuple_partition(orbit_partition(graph, config.k), config.format)
