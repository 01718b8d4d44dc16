from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, Field, computed_field

from ..exception import ProofClaimViolation


class InequalityCheck(BaseModel):
    """分解中的一条整数不等式及其余量"""

    name: str
    lhs: int
    relation: str
    """``<=``, ``>=`` or ``==``"""
    rhs: int
    holds: bool
    asserted: bool = True
    """仅报告的检查不计为违反"""

    @computed_field
    @property
    def slack(self) -> int:
        return self.rhs - self.lhs if self.relation == "<=" else self.lhs - self.rhs


class CellView(BaseModel):
    index: int
    u: int
    x: int
    y: int
    z: int


class CellProbability(BaseModel):
    """随机 transversal 在某个 cell 处为坏的概率"""

    index: int
    case_x: str
    """``v = x`` 时的 ``d0`` / ``d1`` / ``d2_same`` / ``d2_distinct``"""
    case_y: str
    q_x: str
    q_y: str
    bad: str
    """精确有理数形式的 ``q_x + q_y``"""
    census_bad: Optional[str] = None
    """穷举时在全部 transversal 上统计的同一概率"""
    holds: bool
    """``bad >= 1/4`` 且与统计结果一致"""


class CensusReport(BaseModel):
    """``U`` 按 cell 划分后的好 transversal"""

    exact: bool
    total: int
    """``4^|I4|``，非精确时为抽样次数"""
    good_count: int
    strict_good_count: int
    """要求邻点位于 transversal 内的严格好定义"""
    p_good: str
    """精确有理数，抽样时为浮点字符串"""
    wilson_low: Optional[float] = None
    wilson_high: Optional[float] = None
    independent_regime: bool = False
    """任意两个 cell 之间没有边"""
    regime_product: Optional[str] = None
    """独立情形下各 cell 为好的概率之积"""
    regime_matches: Optional[bool] = None


class ProductBoundReport(BaseModel):
    """``p_good <= prod_{I6} (1 - P(B_i)) <= (3/4)^|I6|``"""

    p_good: str
    product_bound: str
    geometric_bound: str
    holds: Optional[bool]
    """抽样统计时为 ``None``"""
    dependencies_disjoint: bool
    neighborhoods_disjoint: bool


class FamilyCheck(BaseModel):
    """共享同一集合 ``S`` 的大小为 ``k`` 的极大独立集"""

    S: list[int]
    size: int
    every_cell_hit: bool
    size_ok: bool
    """``k >= cells + |S|``"""
    transversal_good: bool
    strict_transversal_good: bool
    good_count: Optional[int]
    outside: int
    """``|V - U|``"""
    capture_ok: Optional[bool]
    """``size <= good_count * 2^outside``"""

    @property
    def holds(self) -> bool:
        return (
            self.every_cell_hit
            and self.size_ok
            and self.transversal_good
            and self.capture_ok is not False
        )


class CaptureReport(BaseModel):
    k: int
    mis_k: int
    families: list[FamilyCheck] = Field(default_factory=list)

    @property
    def holds(self) -> bool:
        return all(f.holds for f in self.families)


class PipelineReport(BaseModel):
    """某个 ``(G, I0, S)`` 上 cell 论证的每一步中间结论"""

    n: int
    k: int
    I0: list[int]
    S: list[int]
    sizes: dict[str, int]
    cells: list[CellView]
    edge_count_I0_J0: int
    h_max_degree: int
    inequalities: list[InequalityCheck]
    cell_probabilities: list[CellProbability]
    census: CensusReport
    product: ProductBoundReport
    capture: Optional[CaptureReport] = None
    notes: list[str] = Field(default_factory=list)
    violations: list[str] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def raise_for_violations(self) -> None:
        if self.violations:
            raise ProofClaimViolation(self.violations[0], ", ".join(self.violations))


class InstanceSummary(BaseModel):
    seed: int
    n: int
    k: int
    cells: int
    I6: int
    good_count: int
    total: int
    violations: list[str] = Field(default_factory=list)


class CorpusReport(BaseModel):
    """带种子随机语料上的流水线结果"""

    seed: int
    instances: list[InstanceSummary]
    violation_counts: dict[str, int] = Field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violation_counts
