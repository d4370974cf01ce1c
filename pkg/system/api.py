"""
Ninja API 聚合入口
集中注册各计算 App 的 Router/Controller，接口与命令行动词一一对应。
"""
from ninja_extra import NinjaExtraAPI

from apps.algebra.api import VerifyController
from apps.connection.api import create_connection_router
from apps.core.api.exceptions import APIException
from apps.core.api.responses import ApiResponse
from apps.graph.api import create_graph_router
from apps.hom.api import create_hom_router
from apps.homdet.api import create_homdet_router
from apps.symmetry.api import create_symmetry_router

# 单实例 API，对外暴露给 Django URLConf
api = NinjaExtraAPI(
    title="Graph Homomorphism Algebra API",
    description="加权图同态数、连接矩阵秩与自同构轨道的精确计算与校验",
    version="1.0.0",
    docs_url="/docs/",
    openapi_url="/openapi.json",
)

# 注册各 App Router（统一入口，便于未来分组/前缀调整）
api.add_router("", create_graph_router())
api.add_router("", create_hom_router())
api.add_router("", create_connection_router())
api.add_router("", create_symmetry_router())
api.add_router("", create_homdet_router())

# 注册 Controllers
api.register_controllers(VerifyController)


@api.exception_handler(APIException)
def api_exception_handler(request, exc: APIException):
    """统一处理 APIException，返回标准响应外壳"""
    resp = ApiResponse.from_exception(exc)
    return api.create_response(request, resp.to_dict(), status=resp.status_code)


__all__ = ["api"]
