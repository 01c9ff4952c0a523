"""
错误类型

每个错误都带有命令行返回的退出码。
"""

from typing import Optional


class CyclePowerError(Exception):
    """所有库错误的基类"""

    exit_code: int = 2

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class DomainError(CyclePowerError, ValueError):
    """参数超出操作的定义域"""


class OutOfTheoremDomainError(DomainError):
    """区间最优性只在 n > s 且 1 <= k <= n 时成立"""


class OutOfRegimeError(CyclePowerError):
    """在闭式公式不成立的范围内请求闭式值"""


class BoundUndefinedError(CyclePowerError):
    """Turán 定理只适用于 k 大于团数的情形"""


class VerificationScopeError(CyclePowerError):
    """图过大，拒绝稠密矩阵验证"""


class BudgetExceededError(CyclePowerError):
    """穷举搜索需要枚举的子集数超过预算"""

    exit_code = 3

    def __init__(self, projected: int, budget: int, detail: Optional[str] = None):
        super().__init__(
            detail or f"预计枚举 {projected} 个子集，超过预算 {budget}"
        )
        self.projected = projected
        self.budget = budget


class ConsistencyError(CyclePowerError, AssertionError):
    """同一个量的两种独立计算结果不一致"""

    exit_code = 1
