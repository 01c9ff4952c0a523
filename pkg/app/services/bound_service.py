"""
Turán 界与谱界

C_n^s 的邻接矩阵是循环矩阵，频率 j 处的特征值是连接集上的余弦和。
把 2e(U) = <A chi_U, chi_U> 在特征基下展开即得到谱界。
"""

import math
from math import comb
from typing import Optional, Tuple

import numpy as np

from app.core.config import settings
from app.core.errors import BoundUndefinedError, DomainError, VerificationScopeError
from app.core.logging import logger
from app.schemas.cycle_power import GraphSpec, VertexSubset
from app.schemas.results import BoundReport, SpectrumSummary
from app.utils.cycle_power import edge_count


def turan_general(k: int, omega: int) -> int:
    """
    团数为 omega < k 的 k 顶点图的 Turán 界：
    C(k,2) - omega * m * (m-1) / 2，其中 m = k // omega，整数运算
    """
    if omega < 1 or k <= omega:
        raise BoundUndefinedError(f"Turán 定理要求 k > omega，实际 k={k}, omega={omega}")
    m = k // omega
    return comb(k, 2) - omega * (m * (m - 1) // 2)


class BoundService:
    """C_n^s 的团数、谱以及两个经典上界"""

    def __init__(self, dense_limit: Optional[int] = None, floor_slack: Optional[float] = None):
        self.dense_limit = dense_limit or settings.DENSE_LIMIT
        self.floor_slack = settings.SPECTRAL_FLOOR_SLACK if floor_slack is None else floor_slack
        logger.debug(f"上界服务初始化，稠密验证上限 n <= {self.dense_limit}")

    # Turán 界

    @staticmethod
    def clique_number(spec: GraphSpec) -> int:
        """
        omega(C_n^s)：完全图情形为 n，否则为 s+1

        上界论证把 u_{s+1-i} 与距离为 s+1 的 v_i 配对，这需要
        n - (s+1) >= s+1，即 n >= 2s+2。n = 2s+1 时任意两点距离都不超过 s，图为 K_n。
        """
        if spec.is_complete:
            return spec.n
        return spec.s + 1

    def turan_bound(self, spec: GraphSpec, k: int) -> int:
        """
        取 omega = clique_number(spec) 的 Turán 界

        异常:
            BoundUndefinedError: k <= omega（n >= 2s+2 时即 k <= s+1）
        """
        return turan_general(k, self.clique_number(spec))

    # 谱

    @staticmethod
    def _frequency_values(spec: GraphSpec, freqs: np.ndarray) -> np.ndarray:
        n, s = spec.n, spec.s
        reach = min(s, (n - 1) // 2)
        t = np.arange(1, reach + 1)
        angles = 2.0 * np.pi * np.outer(freqs, t) / n
        values = 2.0 * np.cos(angles).sum(axis=1)
        if n % 2 == 0 and 2 * s >= n:
            # 对径顶点只计一次
            values = values + np.where(freqs % 2 == 0, 1.0, -1.0)
        return values

    def circulant_eigenvalue(self, spec: GraphSpec, j: int) -> float:
        """
        邻接矩阵在频率 j 处的特征值

        n >= 2s+1 时为 sum_{t=1..s} 2 cos(2 pi j t / n)；完全图情形 j = 0 时为 n-1，
        其余为 -1。频率 0 精确返回度数。
        """
        if not 0 <= j < spec.n:
            raise DomainError(f"频率 j={j} 不在 [0, {spec.n}) 内")
        if j == 0:
            return float(spec.degree)
        return float(self._frequency_values(spec, np.array([j]))[0])

    def eigenvalues(self, spec: GraphSpec) -> np.ndarray:
        values = self._frequency_values(spec, np.arange(spec.n))
        values[0] = float(spec.degree)
        return values

    def spectrum(self, spec: GraphSpec) -> SpectrumSummary:
        values = self.eigenvalues(spec)
        return SpectrumSummary(
            n=spec.n,
            s=spec.s,
            eigenvalues=values.tolist(),
            lambda1=float(values.max()),
            lambda2=float(values[1:].max()),
        )

    def lambda2(self, spec: GraphSpec) -> float:
        """频率 j = 1..n-1 中的最大特征值"""
        return float(self._frequency_values(spec, np.arange(1, spec.n)).max())

    # 谱界

    def spectral_bound(self, spec: GraphSpec, k: int) -> Tuple[float, int]:
        """
        |U| = k 时 e(U) <= d k^2 / (2n) + lambda2 (k/2 - k^2 / (2n))

        d = 2s 时即 s k^2 / n + lambda2 (k/2 - k^2/2n)。

        返回:
            (原始实数值, 向下取整后的值)
        """
        if not 1 <= k <= spec.n:
            raise DomainError(f"k={k} 不在 [1, {spec.n}] 内")
        n = spec.n
        raw = spec.degree * k * k / (2 * n) + self.lambda2(spec) * (k / 2 - k * k / (2 * n))
        slack = self.floor_slack * max(1.0, abs(raw))
        return raw, math.floor(raw + slack)

    def bound_report(self, spec: GraphSpec, k: int, exact: int) -> BoundReport:
        try:
            turan: Optional[int] = self.turan_bound(spec, k)
        except BoundUndefinedError:
            turan = None
        raw, floored = self.spectral_bound(spec, k)
        return BoundReport(
            n=spec.n,
            k=k,
            s=spec.s,
            exact=exact,
            turan=turan,
            spectral_raw=raw,
            spectral_int=floored,
            lambda2=self.lambda2(spec),
        )

    # 稠密矩阵验证

    def _check_dense(self, spec: GraphSpec, subset: Optional[VertexSubset] = None) -> None:
        if spec.n > self.dense_limit:
            raise VerificationScopeError(
                f"稠密验证只支持 n <= {self.dense_limit}，实际 n={spec.n}"
            )
        if subset is not None and subset.n != spec.n:
            raise DomainError(f"子集位于 n={subset.n}，图的 n={spec.n}")

    def adjacency_matrix(self, spec: GraphSpec) -> np.ndarray:
        self._check_dense(spec)
        idx = np.arange(spec.n)
        diff = np.abs(idx[:, None] - idx[None, :])
        dist = np.minimum(diff, spec.n - diff)
        return ((dist >= 1) & (dist <= spec.s)).astype(np.int64)

    @staticmethod
    def characteristic_vector(subset: VertexSubset) -> np.ndarray:
        chi = np.zeros(subset.n, dtype=np.int64)
        chi[np.fromiter(subset.members, dtype=np.int64)] = 1
        return chi

    def quadratic_form_edges(self, spec: GraphSpec, subset: VertexSubset) -> int:
        """以 <A chi_U, chi_U> / 2 计算 e(U)，整数精确运算"""
        self._check_dense(spec, subset)
        chi = self.characteristic_vector(subset)
        twice = int(chi @ (self.adjacency_matrix(spec) @ chi))
        return twice // 2

    def trigonometric_basis(self, spec: GraphSpec) -> Tuple[np.ndarray, np.ndarray]:
        """
        邻接矩阵的实正交特征基

        各行依次为 1/sqrt(n)，1 <= j < n/2 的 sqrt(2/n) cos / sin 对，
        n 为偶数时最后一行为 (-1)^t / sqrt(n)。

        返回:
            (形状为 (n, n) 的基, 每行对应的特征值)
        """
        self._check_dense(spec)
        n = spec.n
        t = np.arange(n)
        eig = self.eigenvalues(spec)
        rows = [np.full(n, 1.0 / math.sqrt(n))]
        values = [eig[0]]
        for j in range(1, (n + 1) // 2):
            angle = 2.0 * np.pi * j * t / n
            rows.append(math.sqrt(2.0 / n) * np.cos(angle))
            rows.append(math.sqrt(2.0 / n) * np.sin(angle))
            values.extend([eig[j], eig[j]])
        if n % 2 == 0:
            rows.append(np.where(t % 2 == 0, 1.0, -1.0) / math.sqrt(n))
            values.append(eig[n // 2])
        return np.vstack(rows), np.array(values)

    def spectral_coefficients(self, spec: GraphSpec, subset: VertexSubset) -> Tuple[np.ndarray, np.ndarray]:
        """chi_U 在三角基下的系数 c_j 及对应特征值"""
        self._check_dense(spec, subset)
        basis, values = self.trigonometric_basis(spec)
        coefficients = basis @ self.characteristic_vector(subset).astype(float)
        return coefficients, values

    def spectral_identity_check(self, spec: GraphSpec, subset: VertexSubset) -> bool:
        """在 1e-8 n 误差内检查 sum c_j^2 = |U| 与 sum lambda_j c_j^2 = 2 e(U)"""
        coefficients, values = self.spectral_coefficients(spec, subset)
        squares = coefficients ** 2
        tolerance = 1e-8 * spec.n
        norm_ok = abs(float(squares.sum()) - subset.size) <= tolerance
        form_ok = abs(float((values * squares).sum()) - 2 * edge_count(spec, subset)) <= tolerance
        if not (norm_ok and form_ok):
            logger.warning(f"谱恒等式检查失败: n={spec.n}, s={spec.s}, U={subset}")
        return norm_ok and form_ok
