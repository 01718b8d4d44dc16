from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, Field


class ExtremalReport(BaseModel):
    """某一阶数全部同构类上 mis_{<=k} 的 Eppstein 上界"""

    n: int
    k: int
    bound: str
    """精确有理数形式的 ``3^(4k-n) 4^(n-3k)``"""
    classes: int
    max_count: int
    attainers: list[str] = Field(default_factory=list)
    """mis_{<=k} 等于上界的全部同构类的规范 graph6"""
    violations: list[str] = Field(default_factory=list)
    """超出上界的同构类"""
    mismatches: list[str] = Field(default_factory=list)
    """取等情况与 K3/K4 分支结构不一致的同构类"""
    slack_histogram: dict[str, int] = Field(default_factory=dict)
    """按 ``mis_{<=k} / bound`` 向下取整到 0.1 分桶的同构类数"""

    @property
    def ok(self) -> bool:
        return not self.violations and not self.mismatches


class Degree2Row(BaseModel):
    condition: str
    """``degree_one`` / ``isolated`` / ``long_cycle``"""
    factor: str
    classes: int
    violations: list[str] = Field(default_factory=list)
    tight: list[str] = Field(default_factory=list)
    """恰好达到缩放上界的 ``graph6@k``"""


class Degree2Report(BaseModel):
    """最大度不超过 2 的图的缩放上界"""

    n: int
    rows: list[Degree2Row]

    @property
    def ok(self) -> bool:
        return all(not row.violations for row in self.rows)


class TightnessRow(BaseModel):
    k: int
    max_count: int
    attainer: Optional[str]
    bound: float
    ratio: float


class TightnessReport(BaseModel):
    n: int
    filter: str
    bound: str
    """``eppstein`` 比较 mis_{<=k}，``nielsen`` 和 ``corollary1`` 比较 mis_k"""
    eta: Optional[float] = None
    classes: int
    rows: list[TightnessRow]


class MibsScanReport(BaseModel):
    """全部同构类中极大导出二部子图个数的最大值"""

    n: int
    filter: str
    classes: int
    max_mibs: int
    attainer: Optional[str]
    reference_12: float
    """``12^(n/4)``"""
    reference_6: float
    """``6^(n/4)``，由不相交的 K4 取到"""


class StoredRecord(BaseModel):
    """穷举搜索中持久化的一个同构类"""

    key: str
    """规范 graph6"""
    n: int
    filter: str
    profile: list[int]
    tight_k: list[int] = Field(default_factory=list)
    """mis_{<=k} 等于 Eppstein 上界的 ``k``"""
    violations: int = 0


class SearchReport(BaseModel):
    n: int
    filter: str
    classes: int
    resumed: bool = False
    theorem2: list[ExtremalReport] = Field(default_factory=list)
    degree2: Optional[Degree2Report] = None
    mibs: Optional[MibsScanReport] = None

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.theorem2) and (
            self.degree2 is None or self.degree2.ok
        )
