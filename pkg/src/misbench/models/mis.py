from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, Field


class SizeProfile(BaseModel):
    """按大小统计的极大独立集精确个数"""

    counts: list[int]
    """``counts[k]`` 为 mis_k(G)，``k = 0..n``"""

    @property
    def total(self) -> int:
        """mis(G)"""
        return sum(self.counts)

    def at_most(self, k: int) -> int:
        """mis_{≤k}(G)"""
        return sum(self.counts[: max(k + 1, 0)])

    def exactly(self, k: int) -> int:
        return self.counts[k] if 0 <= k < len(self.counts) else 0

    def convolve(self, other: "SizeProfile") -> "SizeProfile":
        """不交并的大小分布"""
        counts = [0] * (len(self.counts) + len(other.counts) - 1)
        for i, a in enumerate(self.counts):
            if a:
                for j, b in enumerate(other.counts):
                    counts[i + j] += a * b
        return SizeProfile(counts=counts)


class BranchingStats(BaseModel):
    """按最大度分支的递归树形状"""

    nodes: int = 0
    """递归调用次数"""
    leaves: int = 0
    """剩余图为空的候选数"""
    nonmaximal: int = 0
    """被最终极大性过滤掉的候选数"""


class MisFamily(BaseModel):
    """一个图的全部极大独立集，按掩码排序"""

    n: int
    sets: list[int]
    """顶点掩码"""
    profile: SizeProfile
    branching: Optional[BranchingStats] = None
    """仅由分支枚举设置"""

    @classmethod
    def from_sets(
        cls, n: int, sets: list[int], branching: Optional[BranchingStats] = None
    ) -> "MisFamily":
        counts = [0] * (n + 1)
        for mask in sets:
            counts[bin(mask).count("1")] += 1
        return cls(
            n=n,
            sets=sorted(sets),
            profile=SizeProfile(counts=counts),
            branching=branching,
        )

    def of_size(self, k: int) -> list[int]:
        return [s for s in self.sets if bin(s).count("1") == k]


class BoundSlack(BaseModel):
    """精确算术下的一次 (bound, k) 比较"""

    bound: str
    """``moon_moser`` / ``eppstein`` / ``nielsen``"""
    k: int
    count: int
    """按上界种类为 mis(G)、mis_{≤k}(G) 或 mis_k(G)"""
    value: str
    """上界的精确有理数，指数非整数时为浮点数"""
    holds: bool
    tight: bool = False


class BoundCheckReport(BaseModel):
    """已知上界与精确分布的比较"""

    n: int
    profile: SizeProfile
    checks: list[BoundSlack] = Field(default_factory=list)

    @property
    def violations(self) -> list[BoundSlack]:
        return [c for c in self.checks if not c.holds]

