"""gha quotient"""
from apps.symmetry.services import twin_quotient

from ...base import GraphCommand
from ...services import load_weighted_graph, render_weighted_graph


class Command(GraphCommand):
    help = "输出孪生商图 G/~（块内 α 相加）"
    verb = "quotient"
    uses_k = False

    def add_verb_arguments(self, parser):
        parser.add_argument("target", help="加权目标图 JSON")

    def inputs(self, options):
        return [options["target"]]

    def run(self, config, options):
        return render_weighted_graph(twin_quotient(load_weighted_graph(options["target"])), config.format)
