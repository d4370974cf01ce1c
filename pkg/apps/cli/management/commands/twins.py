"""gha twins"""
from apps.symmetry.services import find_twins

from ...base import GraphCommand
from ...services import load_weighted_graph, render_node_partition


class Command(GraphCommand):
    help = "输出孪生划分（β 行相同的节点归为一块）"
    verb = "twins"
    uses_k = False

    def add_verb_arguments(self, parser):
        parser.add_argument("target", help="加权目标图 JSON")

    def inputs(self, options):
        return [options["target"]]

    def run(self, config, options):
        return render_node_partition(find_twins(load_weighted_graph(options["target"])), config.format)
