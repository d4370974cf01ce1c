"""孪生、商图与轨道 API。"""
from __future__ import annotations

from ninja import Router

from apps.core.api.responses import success_response
from apps.graph.schemas import WeightedGraphSchema

from .schemas import (
    OrbitsRequestSchema,
    OrbitsResultSchema,
    TargetRequestSchema,
    TuplePartitionSchema,
    TwinsResultSchema,
)
from .services import find_twins, orbit_partition, twin_quotient


def create_symmetry_router() -> Router:
    router = Router(tags=["对称性"])

    @router.post("/twins")
    def twins(request, payload: TargetRequestSchema):
        partition = find_twins(payload.target.to_domain())
        result = TwinsResultSchema(blocks=[list(b) for b in partition.blocks], twin_free=partition.is_discrete)
        return success_response(data=result)

    @router.post("/quotient")
    def quotient(request, payload: TargetRequestSchema):
        graph = twin_quotient(payload.target.to_domain())
        return success_response(data=WeightedGraphSchema.from_domain(graph))

    @router.post("/orbits")
    def orbits(request, payload: OrbitsRequestSchema):
        partition = orbit_partition(payload.target.to_domain(), payload.k)
        result = OrbitsResultSchema(orbits=len(partition), partition=TuplePartitionSchema.from_domain(partition))
        return success_response(data=result)

    return router


__all__ = ["create_symmetry_router"]
