from __future__ import annotations

from pydantic import BaseModel, Field


class MibsRecord(BaseModel):
    """一个极大导出二部子图及产生它的集合对"""

    vertices: int
    """子图的顶点掩码"""
    witnesses: list[tuple[int, int]] = Field(default_factory=list)
    """满足 ``|A| >= |B|`` 的规范集合对 ``(A, B)``"""


class EnvelopeRow(BaseModel):
    """两段求和估计按 |A| 分组的检查包络"""

    k: int
    records: int
    """存在 ``|A| = k`` 见证的记录数"""
    mis_k: int
    max_complement_mis: int
    """A 取遍 MIS_k(G) 时 mis(G - A) 的最大值"""
    holds: bool


class MibsCensus(BaseModel):
    """一个图的全部极大导出二部子图"""

    n: int
    records: list[MibsRecord]
    distinct_count: int
    ordered_pair_count: int = 0
    """并集为极大的集合对 (A, B)，A ∈ MIS(G)，B ∈ MIS(G - A)"""
    a_size_histogram: dict[int, int] = Field(default_factory=dict)
    """存在 ``|A| = k`` 见证的记录数"""
    nonmaximal_candidates: int = 0
    """并集是二部图但不是极大的集合对"""
    records_without_witness: int = 0
    """只由 ``|A| < |B|`` 的集合对产生的记录数"""
    envelope: list[EnvelopeRow] = Field(default_factory=list)

    @property
    def vertex_sets(self) -> list[int]:
        return [r.vertices for r in self.records]


class ComponentIdentityReport(BaseModel):
    """K 为 K4 分支时 mibs(G) = 6 · mibs(G − K)"""

    component: int
    """K4 分支的顶点掩码"""
    mibs: int
    mibs_rest: int
    identity_holds: bool
    every_record_meets_twice: bool
