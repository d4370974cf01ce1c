"""划分、置换与对称性 API 的传输结构。"""
from __future__ import annotations

from typing import List

from ninja import Schema
from pydantic import Field

from apps.graph.schemas import WeightedGraphSchema

from .model import NodePartition, Permutation, TuplePartition


class PartitionSchema(Schema):
    """节点划分：块为 0 起始节点编号列表。"""

    blocks: List[List[int]]

    @classmethod
    def from_domain(cls, partition: NodePartition) -> "PartitionSchema":
        return cls(blocks=[list(b) for b in partition.blocks])


class TuplePartitionSchema(Schema):
    k: int
    blocks: List[List[List[int]]]

    @classmethod
    def from_domain(cls, partition: TuplePartition) -> "TuplePartitionSchema":
        return cls(k=partition.k, blocks=[[list(phi) for phi in block] for block in partition.blocks])


class PermutationSchema(Schema):
    images: List[int]

    @classmethod
    def from_domain(cls, sigma: Permutation) -> "PermutationSchema":
        return cls(images=list(sigma.images))


class TargetRequestSchema(Schema):
    target: WeightedGraphSchema


class OrbitsRequestSchema(Schema):
    target: WeightedGraphSchema
    k: int = Field(..., ge=0)


class TwinsResultSchema(Schema):
    blocks: List[List[int]]
    twin_free: bool


class OrbitsResultSchema(Schema):
    orbits: int
    partition: TuplePartitionSchema


__all__ = [
    "PartitionSchema",
    "TuplePartitionSchema",
    "PermutationSchema",
    "TargetRequestSchema",
    "OrbitsRequestSchema",
    "TwinsResultSchema",
    "OrbitsResultSchema",
]
