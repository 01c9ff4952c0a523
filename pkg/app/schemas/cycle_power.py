"""
圈幂图与顶点子集的数据模型
"""

from typing import Iterable, Tuple

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator

from app.utils import bitset


class GraphSpec(BaseModel):
    """确定 C_n^s 的 (n, s)：环上 n 个顶点，相距不超过 s 跳的顶点相邻"""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=3, description="环长（顶点数）")
    s: int = Field(..., ge=1, description="幂次：邻接半径（跳数）")

    @computed_field
    @property
    def is_complete(self) -> bool:
        """所有环距离都不超过 s，C_n^s 即完全图 K_n"""
        return self.s >= self.n // 2

    @computed_field
    @property
    def strict_regime(self) -> bool:
        """n >= 2s+2：两侧邻域不相交，团数为 s+1"""
        return self.n >= 2 * self.s + 2

    @property
    def degree(self) -> int:
        return self.n - 1 if self.is_complete else 2 * self.s

    def canon(self, vertex: int) -> int:
        return vertex % self.n


class VertexSubset(BaseModel):
    """
    Z/nZ 的子集 U，以 n 位整数存储

    第 v 位置位当且仅当 v 属于 U，即 mask 就是 U 的特征向量。
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1, description="所在环的长度")
    mask: int = Field(0, ge=0, description="成员位集")

    @model_validator(mode="after")
    def _check_range(self) -> "VertexSubset":
        if self.mask >> self.n:
            raise ValueError(f"mask 含有 [0, {self.n}) 之外的成员")
        return self

    @classmethod
    def from_members(cls, n: int, members: Iterable[int]) -> "VertexSubset":
        """由成员构造子集，每个成员先对 n 取模"""
        return cls(n=n, mask=bitset.make_bitset(v % n for v in members))

    @classmethod
    def empty(cls, n: int) -> "VertexSubset":
        return cls(n=n, mask=0)

    @property
    def members(self) -> Tuple[int, ...]:
        return tuple(bitset.iter_indexes(self.mask))

    @property
    def size(self) -> int:
        return bitset.count_bits(self.mask)

    def __len__(self) -> int:
        return self.size

    def __contains__(self, vertex: object) -> bool:
        if not isinstance(vertex, int):
            return False
        return bool(self.mask >> (vertex % self.n) & 1)

    def rotate(self, shift: int) -> "VertexSubset":
        return VertexSubset(n=self.n, mask=bitset.rotate(self.mask, shift, self.n))

    def reflect(self) -> "VertexSubset":
        return VertexSubset(n=self.n, mask=bitset.reflect(self.mask, self.n))

    def __str__(self) -> str:
        return "{" + ",".join(str(v) for v in self.members) + "}"
