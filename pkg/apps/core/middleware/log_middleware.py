"""核心日志中间件：记录 /api/ 请求的方法、路径、状态码与耗时。"""
import logging

from django.conf import settings

from apps.core.utils.time_utils import duration_ms, now

logger = logging.getLogger(__name__)

MAX_QUERY_VALUE = 64


def summarize_query(params) -> dict:
    """查询参数的精简副本：过长的值截断，便于写入单行日志。"""
    summary = {}
    for key in sorted(params.keys()):
        value = str(params.get(key))
        summary[key] = value if len(value) <= MAX_QUERY_VALUE else value[:MAX_QUERY_VALUE] + "..."
    return summary


class LogMiddleware:
    """
    日志记录中间件
    - 只记录 /api/ 下的请求，文档页面除外
    - 4xx/5xx 以 WARNING 记录，其余为 INFO
    """

    def __init__(self, get_response):
        self.get_response = get_response
        self.exclude_paths = getattr(settings, "LOG_EXCLUDE_PATHS", ["/api/docs/", "/api/openapi.json"])

    def __call__(self, request):
        started = now()
        response = self.get_response(request)
        if self.should_log(request):
            self.log_request(request, response, duration_ms(started))
        return response

    def should_log(self, request) -> bool:
        """判断是否需要记录日志"""
        if not request.path.startswith("/api/"):
            return False
        return not any(request.path.startswith(path) for path in self.exclude_paths)

    def log_request(self, request, response, elapsed_ms: int):
        level = logging.WARNING if response.status_code >= 400 else logging.INFO
        logger.log(
            level,
            "%s %s %d %dms query=%s",
            request.method,
            request.path,
            response.status_code,
            elapsed_ms,
            summarize_query(getattr(request, "GET", {})),
        )
