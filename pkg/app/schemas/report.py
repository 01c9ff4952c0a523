"""
对比表格的数据模型
"""

from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator


class TableRow(BaseModel):
    """精确值与上界对比中的一行"""

    model_config = ConfigDict(frozen=True)

    k: int = Field(..., ge=1)
    s: int = Field(..., ge=1)
    exact: int = Field(..., description="精确最大值")
    spectral: int = Field(..., description="向下取整后的谱界")
    turan: Optional[int] = Field(None, description="Turán 界，不适用时为 None")
    spectral_raw: Optional[float] = Field(None, description="取整前的谱界")

    @property
    def spectral_gap(self) -> Optional[float]:
        if self.exact == 0:
            return None
        return (self.spectral - self.exact) / self.exact

    @property
    def turan_gap(self) -> Optional[float]:
        if self.exact == 0 or self.turan is None:
            return None
        return (self.turan - self.exact) / self.exact

    @property
    def tighter_bound(self) -> Literal["spectral", "turan", "none"]:
        spectral, turan = self.spectral_gap, self.turan_gap
        if spectral is None:
            return "none"
        if turan is None or spectral < turan:
            return "spectral"
        if turan < spectral:
            return "turan"
        return "none"


class TableSpec(BaseModel):
    """环长及需要制表的 (k, s) 对"""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=3)
    rows: List[Tuple[int, int]] = Field(..., min_length=1, description="按输出顺序排列的 (k, s) 对")

    @model_validator(mode="after")
    def _check_rows(self) -> "TableSpec":
        for k, s in self.rows:
            if not 1 <= k <= self.n:
                raise ValueError(f"k={k} 不在 [1, {self.n}] 内")
            if not 1 <= s < self.n:
                raise ValueError(f"s={s} 不在 [1, {self.n}) 内")
        return self


class ReferenceMismatch(BaseModel):
    """与已发表数值不一致的表格项"""

    k: int
    s: int
    column: Literal["exact", "spectral", "turan"]
    expected: int
    observed: Optional[int]

    @property
    def within_one(self) -> bool:
        return self.observed is not None and abs(self.observed - self.expected) <= 1
