"""同构判定 API。"""
from __future__ import annotations

from ninja import Router

from apps.core.api.responses import success_response

from .schemas import IsoRequestSchema, IsoVerdictSchema
from .services import decide_isomorphic


def create_homdet_router() -> Router:
    router = Router(tags=["同构判定"])

    @router.post("/iso")
    def iso(request, payload: IsoRequestSchema):
        verdict = decide_isomorphic(payload.g1.to_domain(), payload.g2.to_domain(), payload.max_pattern_nodes)
        return success_response(data=IsoVerdictSchema.from_domain(verdict))

    return router


__all__ = ["create_homdet_router"]
