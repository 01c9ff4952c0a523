"""
精确极值服务

区间最优性：C_n^s 中任意 k 元子集的诱导边数都不超过 k 个连续顶点，
因此精确最大值就是一个区间的边数。当 s+1 <= k 且 k+s < n 时，
该边数有闭式 sk - s(s+1)/2。
"""

from math import comb
from typing import List, Optional

from app.core.config import settings
from app.core.errors import ConsistencyError, OutOfRegimeError, OutOfTheoremDomainError
from app.core.logging import logger
from app.schemas.cycle_power import GraphSpec
from app.schemas.results import ExactResult, RegimeFlags
from app.utils.cycle_power import edge_count, interval


class ExtremalService:
    """计算 k 个顶点诱导边数的精确最大值"""

    def __init__(self, verify: Optional[bool] = None):
        """
        初始化精确极值服务

        参数:
            verify: 闭式公式适用时是否与区间计数交叉校验，
                默认取 settings.VERIFY_CROSS_CHECKS
        """
        self.verify = settings.VERIFY_CROSS_CHECKS if verify is None else verify
        logger.debug(f"精确极值服务初始化，交叉校验: {self.verify}")

    @staticmethod
    def regime_flags(spec: GraphSpec, k: int) -> RegimeFlags:
        return RegimeFlags(
            complete=spec.is_complete,
            strict_regime=spec.strict_regime,
            k_ge_s_plus_2=k >= spec.s + 2,
            k_plus_s_lt_n=k + spec.s < spec.n,
        )

    @staticmethod
    def uses_closed_form(spec: GraphSpec, k: int) -> bool:
        """闭式 sk - s(s+1)/2 成立的范围：s+1 <= k 且 k+s < n"""
        return spec.s + 1 <= k and k + spec.s < spec.n

    def exact_max(self, spec: GraphSpec, k: int) -> ExactResult:
        """
        所有 |U| = k 的子集中 e(U) 的精确最大值

        参数:
            spec: 图 C_n^s
            k: 子集大小，1 <= k <= n

        返回:
            ExactResult，包含数值及其计算方式

        异常:
            OutOfTheoremDomainError: n <= s 或 k 不在 [1, n] 内
        """
        if spec.n <= spec.s:
            raise OutOfTheoremDomainError(f"区间最优性要求 n > s，实际 n={spec.n}, s={spec.s}")
        if not 1 <= k <= spec.n:
            raise OutOfTheoremDomainError(f"k={k} 不在 [1, {spec.n}] 内")

        if spec.is_complete:
            value, method = comb(k, 2), "complete_graph"
        elif self.uses_closed_form(spec, k):
            value, method = self.closed_form(spec, k), "closed_form"
            if self.verify:
                counted = self.interval_count(spec, k)
                if counted != value:
                    raise ConsistencyError(
                        f"闭式值 {value} 与区间计数 {counted} 不一致，"
                        f"n={spec.n}, k={k}, s={spec.s}"
                    )
        else:
            value, method = self.interval_count(spec, k), "interval_count"

        logger.debug(f"exact_max n={spec.n} k={k} s={spec.s} -> {value} ({method})")
        return ExactResult(
            n=spec.n,
            k=k,
            s=spec.s,
            value=value,
            method=method,
            regime_flags=self.regime_flags(spec, k),
            min_boundary=spec.degree * k - 2 * value,
        )

    @staticmethod
    def interval_count(spec: GraphSpec, k: int) -> int:
        return edge_count(spec, interval(spec, 0, k))

    @staticmethod
    def closed_form(spec: GraphSpec, k: int) -> int:
        """
        s+1 <= k 且 k+s < n 时为 sk - s(s+1)/2

        k <= s+1 时区间是团，返回 C(k, 2)；两者在 k = s+1 处相等。

        异常:
            OutOfRegimeError: k + s >= n
        """
        s = spec.s
        if k + s >= spec.n:
            raise OutOfRegimeError(f"闭式公式要求 k+s < n，实际 k={k}, s={s}, n={spec.n}")
        if k < 1:
            raise OutOfRegimeError(f"闭式公式要求 k >= 1，实际 k={k}")
        if k <= s + 1:
            return comb(k, 2)
        return s * k - s * (s + 1) // 2

    @staticmethod
    def interval_degree_profile(spec: GraphSpec, k: int) -> List[int]:
        """
        区间 {0, ..., k-1} 内每个顶点的度数

        k >= 2s 时两侧各 s 个最外层顶点的度数依次为 s, s+1, ..., 2s-1，
        内部为 2s。s < k < 2s 时两侧各 k-s 个最外层顶点的度数为 s, ..., k-1，
        中间 2s-k 个顶点的度数为 k-1。k <= s 时区间是团。

        异常:
            OutOfRegimeError: k + s >= n，此时出现绕回的边
        """
        s = spec.s
        if k + s >= spec.n:
            raise OutOfRegimeError(f"度数分布要求 k+s < n，实际 k={k}, s={s}, n={spec.n}")
        if k < 1:
            raise OutOfRegimeError(f"度数分布要求 k >= 1，实际 k={k}")
        if k <= s:
            return [k - 1] * k
        if k >= 2 * s:
            side = [s + i for i in range(s)]
            middle = [2 * s] * (k - 2 * s)
        else:
            side = [s + i for i in range(k - s)]
            middle = [k - 1] * (2 * s - k)
        return side + middle + side[::-1]

    def min_edge_boundary(self, spec: GraphSpec, k: int) -> int:
        """k 元子集向外连出的最少边数：degree * k - 2 * 精确最大值"""
        return self.exact_max(spec, k).min_boundary
