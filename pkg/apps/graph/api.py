"""图目录 API。"""
from __future__ import annotations

from ninja import Query, Router

from apps.core.api.responses import success_response

from .model import CatalogBounds
from .schemas import GraphCatalogSchema
from .selectors import catalog_for


def create_graph_router() -> Router:
    router = Router(tags=["图目录"])

    @router.get("/catalog")
    def get_catalog(
        request,
        k: int = Query(..., ge=0),
        max_nodes: int = Query(..., ge=0),
        max_edges: int = Query(..., ge=0),
        max_mult: int = Query(2, ge=1),
    ):
        catalog = catalog_for(k, CatalogBounds(max_nodes, max_edges, max_mult))
        return success_response(data=GraphCatalogSchema.from_domain(catalog))

    return router


__all__ = ["create_graph_router"]
