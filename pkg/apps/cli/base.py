"""管理命令基类：统一的选项、异常到退出码的映射与确定性输出。"""
from __future__ import annotations

from typing import List

from django.core.management.base import BaseCommand, CommandError, CommandParser

from apps.core.api.exceptions import APIException
from apps.core.utils.serializers import dumps

from .schemas import OutputFormat, RunConfig

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_POLICY = 3
EXIT_INCONCLUSIVE = 4

FAILURE_MESSAGES = {EXIT_FAIL: "校验失败", EXIT_INCONCLUSIVE: "在当前上界内无法确定"}


class GraphCommand(BaseCommand):
    """子类实现 run(config, options) -> str；需要非零退出时设置 self.outcome。"""

    verb = ""
    default_format = OutputFormat.JSON
    uses_k = True
    uses_bounds = False

    def add_arguments(self, parser: CommandParser) -> None:
        self.add_verb_arguments(parser)
        if self.uses_k:
            parser.add_argument("--k", type=int, default=0, help="标号数 k")
        parser.add_argument("--format", choices=[f.value for f in OutputFormat], default=self.default_format.value)
        parser.add_argument("--jobs", type=int, default=None, help="工作进程数（默认取 GHA_JOBS）")
        if self.uses_bounds:
            parser.add_argument("--max-nodes", dest="max_nodes", type=int, default=None)
            parser.add_argument("--max-edges", dest="max_edges", type=int, default=None)
            parser.add_argument("--max-mult", dest="max_mult", type=int, default=None)

    def add_verb_arguments(self, parser: CommandParser) -> None:
        pass

    def inputs(self, options) -> List[str]:
        return []

    def run(self, config: RunConfig, options) -> str:
        raise NotImplementedError

    def handle(self, *args, **options):
        self.outcome = EXIT_OK
        try:
            config = RunConfig.from_options(self.verb, options, self.inputs(options))
            output = self.run(config, options)
        except APIException as exc:
            self.stderr.write(exc.message)
            if exc.data is not None:
                self.stdout.write(dumps(exc.to_dict()))
            raise CommandError(exc.message, returncode=exc.exit_code)
        self.stdout.write(output)
        if self.outcome != EXIT_OK:
            raise CommandError(FAILURE_MESSAGES.get(self.outcome, "命令失败"), returncode=self.outcome)


__all__ = ["GraphCommand", "EXIT_OK", "EXIT_FAIL", "EXIT_INPUT", "EXIT_POLICY", "EXIT_INCONCLUSIVE"]
