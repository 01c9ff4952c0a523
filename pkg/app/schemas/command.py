"""
命令行请求模型
"""

from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator

OUTPUT_FORMATS = {
    "exact": ("plain", "json"),
    "bounds": ("plain", "json"),
    "search": ("plain", "json"),
    "verify": ("plain", "json"),
    "table": ("plain", "markdown", "csv", "json"),
}


class CommandRequest(BaseModel):
    """解析后的命令行，分发前先做校验"""

    subcommand: Literal["exact", "bounds", "table", "search", "verify"]
    n: Optional[int] = Field(None, description="环长")
    k: Optional[int] = Field(None, description="子集大小")
    s: Optional[int] = Field(None, description="幂次")
    format: str = Field("plain", description="输出格式")
    all_maximizers: bool = Field(False, description="统计全部最优子集（search）")
    no_symmetry: bool = Field(False, description="关闭旋转对称约简（search）")
    prune: bool = Field(False, description="启用基于上界的剪枝（search, verify）")
    jobs: Optional[int] = Field(None, ge=1, description="搜索进程数")
    max_n: Optional[int] = Field(None, ge=3, description="最大环长（verify）")
    budget: Optional[int] = Field(None, ge=1, description="允许枚举的最大子集数")
    spec_file: Optional[Path] = Field(None, description="表格描述文件（table）")
    with_raw: bool = Field(False, description="JSON 中附带取整前的谱界（table）")
    check: bool = Field(False, description="与已发表的表格核对（table）")

    @model_validator(mode="after")
    def _check_ranges(self) -> "CommandRequest":
        allowed = OUTPUT_FORMATS[self.subcommand]
        if self.format not in allowed:
            raise ValueError(f"{self.subcommand} 不支持格式 '{self.format}'，可选: {', '.join(allowed)}")
        if self.subcommand in ("exact", "bounds", "search"):
            if self.n is None or self.k is None or self.s is None:
                raise ValueError(f"{self.subcommand} 需要 --n、--k 和 --s")
            if self.n < 3:
                raise ValueError(f"n 至少为 3，实际为 {self.n}")
            if self.s < 1:
                raise ValueError(f"s 至少为 1，实际为 {self.s}")
            if not 1 <= self.k <= self.n:
                raise ValueError(f"k 必须在 [1, n={self.n}] 内，实际为 {self.k}")
        return self
