"""
各服务返回的结果模型
"""

from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, computed_field

from app.schemas.cycle_power import VertexSubset


class RegimeFlags(BaseModel):
    """某个 (n, k, s) 满足哪些前提条件"""

    model_config = ConfigDict(frozen=True)

    complete: bool = Field(..., description="C_n^s 是完全图")
    strict_regime: bool = Field(..., description="n >= 2s+2")
    k_ge_s_plus_2: bool = Field(..., description="k >= s+2")
    k_plus_s_lt_n: bool = Field(..., description="k+s < n，闭式公式成立的范围")


class ExactResult(BaseModel):
    """所有 k 元子集中诱导边数的最大值"""

    model_config = ConfigDict(frozen=True)

    n: int
    k: int
    s: int
    value: int = Field(..., ge=0, description="精确最大值")
    method: Literal["closed_form", "interval_count", "complete_graph"]
    regime_flags: RegimeFlags
    min_boundary: int = Field(..., ge=0, description="k 元子集向外连出的最少边数")


class SpectrumSummary(BaseModel):
    """C_n^s 邻接矩阵按频率排列的谱"""

    model_config = ConfigDict(frozen=True)

    n: int
    s: int
    eigenvalues: List[float] = Field(..., description="频率 j 处的特征值，j = 0..n-1")
    lambda1: float = Field(..., description="最大特征值（即度数）")
    lambda2: float = Field(..., description="频率 j >= 1 中的最大特征值")


class BoundReport(BaseModel):
    """某个 (n, k, s) 的精确值与两个经典上界"""

    model_config = ConfigDict(frozen=True)

    n: int
    k: int
    s: int
    exact: int
    turan: Optional[int] = Field(None, description="Turán 定理不适用（k <= 团数）时为 None")
    spectral_raw: float
    spectral_int: int
    lambda2: float


class SearchResult(BaseModel):
    """一次穷举搜索的结果"""

    model_config = ConfigDict(frozen=True)

    n: int
    k: int
    s: int
    max_edges: int
    witness: VertexSubset = Field(..., description="枚举空间中字典序最小的最优子集")
    maximizer_count: Optional[int] = Field(None, description="全部 C(n,k) 个子集中最优子集的个数（按需计算）")
    subsets_examined: int
    used_symmetry: bool
    pruned: bool = False


class Violation(BaseModel):
    """验证网格中的一次失败检查"""

    model_config = ConfigDict(frozen=True)

    n: int
    s: int
    k: int
    check: str
    expected: Optional[int] = None
    observed: Optional[int] = None
    witness: Optional[str] = None


class VerificationReport(BaseModel):
    """完整网格验证的汇总"""

    max_n: int
    cases_checked: int = 0
    subsets_examined: int = 0
    violations: List[Violation] = Field(default_factory=list)

    @computed_field
    @property
    def ok(self) -> bool:
        return not self.violations
