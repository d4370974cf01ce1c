"""gha seedgraph：生成随机有理加权目标图，写到 stdout。"""
from apps.graph.services import seed_weighted_graph

from ...base import GraphCommand
from ...services import render_weighted_graph


class Command(GraphCommand):
    help = "用固定种子生成随机加权目标图 JSON"
    verb = "seedgraph"
    uses_k = False

    def add_verb_arguments(self, parser):
        parser.add_argument("--m", type=int, required=True, help="节点数")
        parser.add_argument("--seed", type=int, default=0)
        parser.add_argument("--density", type=int, default=50, help="边密度百分比")

    def run(self, config, options):
        graph = seed_weighted_graph(options["m"], seed=options["seed"], density=options["density"])
        return render_weighted_graph(graph, config.format)
