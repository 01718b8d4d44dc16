from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, Field


class BoundValue(BaseModel):
    """精确有理数或自然对数形式的上界"""

    exact: Optional[str] = None
    """所有指数为整数时为 ``"p/q"``"""
    log: float
    """上界的自然对数"""
    value: Optional[float] = None
    """浮点值，溢出时为 ``None``"""


class BoundsReport(BaseModel):
    """某个 ``(n, k, eta)`` 处的全部闭式上界"""

    n: int
    k: int
    eta: float
    moon_moser: BoundValue
    eppstein: BoundValue
    nielsen: BoundValue
    corollary1: BoundValue
    identity_residual: float
    """按度数分支的归纳恒等式的相对残差"""
    identity_holds: bool
    """残差小于 ``IDENTITY_TOLERANCE``"""


class CurveRow(BaseModel):
    """``x = k / n`` 处的指数曲线 ``ln(bound) / n``"""

    x: float
    eppstein: float
    nielsen: float
    interp: float
    """``x ln(1/x)``"""
    corollary1_eta: float


class Eq3Result(BaseModel):
    """极大导出二部子图个数的两段求和估计"""

    n: int
    p_cut: int
    eta: float
    eps: Optional[float] = None
    """设置时，A 的插值因子只用于 ``k <= (1 + eps) n / 4``"""
    mibs1_log: Optional[float]
    """空和为 ``None``"""
    mibs2_log: Optional[float]
    mibs1_max_log: Optional[float]
    mibs2_max_log: Optional[float]
    max_term_log: float
    argmax: int
    reference_log: float
    """``(n / 4) ln 12``"""


class MonotonicityReport(BaseModel):
    """两段求和的项关于 ``k`` 单调的符号条件"""

    eta: float
    c1: float
    c2: float
    n_checked: int = 0
    mibs1_nondecreasing: bool = True
    mibs2_nonincreasing: bool = True


class TailCheck(BaseModel):
    """``sum_{s <= alpha N} C(N, s) <= 2^{h(alpha) N}``"""

    N: int
    alpha: float
    lhs: int
    rhs_log2: float
    holds: bool


class SolveReport(BaseModel):
    """由 cell 论证最终指数得到的可行 ``(eps, delta)``"""

    margin: float
    eps: float
    delta: float
    f_eps: float
    f_zero: float
    eta: Optional[float] = None
    """该 ``(eps, delta)`` 下最大的可行插值参数"""
    label: str = "admissible witness"


class WitnessReport(BaseModel):
    """具体参数下两段求和的有效底数 ``12 - nu``"""

    n: int
    eta: float
    xi: float
    eps: Optional[float]
    p_cut: int
    nu1: Optional[float]
    """``12 - (第一段最大项)^(4/n)``"""
    nu2: Optional[float]
    holds: bool
    """两段的最大项都严格小于 ``12^(n/4)``"""
    step_holds: bool = True
    """取较小的 ``nu`` 时 ``6 (12 - nu)^((n-4)/4) < (12 - nu)^(n/4)``"""


class AdmissibleWitness(BaseModel):
    """``(eps*, delta*, eta*)`` 及由此得到的 ``nu``"""

    solve: SolveReport
    witness: WitnessReport
    tail_checks: list[TailCheck] = Field(default_factory=list)
