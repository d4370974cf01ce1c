"""同态计数 API。"""
from __future__ import annotations

from ninja import Router

from apps.core.api.responses import success_response
from apps.core.utils.rationals import format_rational

from .schemas import HomRequestSchema, HomResultSchema
from .services import hom, hom_partial


def create_hom_router() -> Router:
    router = Router(tags=["同态计数"])

    @router.post("/hom")
    def compute_hom(request, payload: HomRequestSchema):
        pattern = payload.pattern.to_domain()
        target = payload.target.to_domain()
        value = hom(pattern, target) if payload.phi is None else hom_partial(pattern, target, payload.phi)
        return success_response(data=HomResultSchema(value=format_rational(value)))

    return router


__all__ = ["create_hom_router"]
