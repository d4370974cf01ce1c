"""gha iso：同态轮廓区分或给出显式同构。"""
from apps.homdet.model import Verdict
from apps.homdet.services import decide_isomorphic

from ...base import EXIT_INCONCLUSIVE, GraphCommand
from ...services import load_weighted_graph, render_verdict


class Command(GraphCommand):
    help = "判定两个加权图是否同构，输出带见证的结论"
    verb = "iso"
    uses_k = False

    def add_verb_arguments(self, parser):
        parser.add_argument("g1", help="第一个加权图 JSON")
        parser.add_argument("g2", help="第二个加权图 JSON")
        parser.add_argument("--max-pattern-nodes", dest="max_pattern_nodes", type=int, default=None)

    def inputs(self, options):
        return [options["g1"], options["g2"]]

    def run(self, config, options):
        g1 = load_weighted_graph(options["g1"])
        g2 = load_weighted_graph(options["g2"])
        verdict = decide_isomorphic(g1, g2, options.get("max_pattern_nodes"), jobs=config.jobs)
        if verdict.verdict is Verdict.INCONCLUSIVE:
            self.outcome = EXIT_INCONCLUSIVE
        return render_verdict(verdict, config.format)
