"""gha verify：秩定理及其配套引理的完整校验组。

有孪生时自动取商图并在 stderr 给出提示；--strict 时改为策略错误（退出码 3）。
上界选项作为升级阶梯的上限。
"""
from apps.algebra.model import CheckStatus
from apps.algebra.services import run_suite

from ...base import EXIT_FAIL, EXIT_INCONCLUSIVE, GraphCommand
from ...services import load_weighted_graph, render_suite

STATUS_EXIT = {CheckStatus.FAIL: EXIT_FAIL, CheckStatus.INCONCLUSIVE: EXIT_INCONCLUSIVE}


class Command(GraphCommand):
    help = "校验 rk(M(k, G)) = orb_k(G) 及相关引理，输出逐项报告"
    verb = "verify"
    uses_bounds = True

    def add_verb_arguments(self, parser):
        parser.add_argument("target", help="加权目标图 JSON")
        parser.add_argument("--strict", action="store_true", help="遇到孪生时报错而不是取商图")

    def inputs(self, options):
        return [options["target"]]

    def run(self, config, options):
        graph = load_weighted_graph(options["target"])
        report = run_suite(graph, config.k, strict=config.strict, jobs=config.jobs, ladder_for=config.ladder)
        for notice in report.notices:
            self.stderr.write(notice)
        if report.skipped:
            self.stderr.write(f"skipped: {', '.join(report.skipped)}")
        self.outcome = STATUS_EXIT.get(report.status, self.outcome)
        return render_suite(report, config.format)
