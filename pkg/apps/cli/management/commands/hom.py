"""gha hom：精确计算 hom(F, G)，或带 --labels/--phi 时计算 hom_φ(F, G)。"""
from apps.core.api.exceptions import ValidationException
from apps.core.utils.rationals import format_rational
from apps.hom.services import hom, hom_partial

from ...base import GraphCommand
from ...schemas import OutputFormat
from ...services import load_k_labeled_graph, load_weighted_graph, parse_phi, render_scalar


class Command(GraphCommand):
    help = "计算同态数 hom(F, G)，输出精确有理数 p/q"
    verb = "hom"
    default_format = OutputFormat.TEXT
    uses_k = False

    def add_verb_arguments(self, parser):
        parser.add_argument("pattern", help="k 标号模式图 JSON")
        parser.add_argument("target", help="加权目标图 JSON")
        parser.add_argument("--labels", type=int, default=None, help="模式图的标号数 k")
        parser.add_argument("--phi", default=None, help="标号节点的像，如 0,2")

    def inputs(self, options):
        return [options["pattern"], options["target"]]

    def run(self, config, options):
        pattern = load_k_labeled_graph(options["pattern"])
        graph = load_weighted_graph(options["target"])
        labels, phi_text = options.get("labels"), options.get("phi")
        if labels is None and phi_text is None:
            value = hom(pattern, graph)
        else:
            if labels is not None and labels != pattern.k:
                raise ValidationException(f"--labels {labels} 与模式图的 k={pattern.k} 不一致")
            phi = parse_phi(phi_text or "")
            if len(phi) != pattern.k:
                raise ValidationException(f"--phi 长度 {len(phi)} 与模式图的 k={pattern.k} 不一致")
            value = hom_partial(pattern, graph, phi)
        return render_scalar("value", format_rational(value), config.format)
