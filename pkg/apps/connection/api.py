"""连接矩阵秩 API。"""
from __future__ import annotations

from ninja import Router

from apps.core.api.responses import success_response
from apps.graph.schemas import CatalogBoundsSchema
from apps.graph.selectors import catalog_for, default_bounds

from .schemas import RankRequestSchema, RankResultSchema
from .services import connection_rank


def create_connection_router() -> Router:
    router = Router(tags=["连接矩阵"])

    @router.post("/rank")
    def compute_rank(request, payload: RankRequestSchema):
        graph = payload.target.to_domain()
        bounds = payload.bounds.to_domain() if payload.bounds else default_bounds(payload.k)
        catalog = catalog_for(payload.k, bounds)
        result = RankResultSchema(
            rank=connection_rank(payload.k, graph, catalog),
            catalog_size=len(catalog),
            bounds=CatalogBoundsSchema.from_domain(bounds),
        )
        return success_response(data=result)

    return router


__all__ = ["create_connection_router"]
