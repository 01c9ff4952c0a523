"""
用穷举判定器在网格上验证区间最优性与两个上界
"""

from math import comb
from typing import Optional

from app.core.errors import BoundUndefinedError, BudgetExceededError
from app.core.logging import logger
from app.schemas.cycle_power import GraphSpec
from app.schemas.results import VerificationReport, Violation
from app.services.bound_service import BoundService
from app.services.extremal_service import ExtremalService
from app.services.search_service import SearchService
from app.utils.cycle_power import edge_count


class VerificationService:
    """将每一项精确值与上界计算同穷举搜索结果对照"""

    def __init__(self, search_service: Optional[SearchService] = None):
        """
        初始化验证服务

        参数:
            search_service: 穷举判定器，整个网格复用同一个实例（及其进程池）
        """
        self.search_service = search_service or SearchService()
        # 不一致只记录，不抛出
        self.extremal_service = ExtremalService(verify=False)
        self.bound_service = BoundService()
        logger.info("验证服务初始化完成")

    def verify_theorem_grid(
        self,
        max_n: int,
        check_symmetry: bool = False,
        prune: bool = False,
    ) -> VerificationReport:
        """
        检查所有 n in [3, max_n]、s in [1, n-1]、k in [1, n]

        对每个三元组：判定器的最大值等于区间边数与 exact_max；见证子集重算后等于最大值；
        取整后的谱界以及 Turán 界（k >= s+2 且 n >= 2s+2 时）不小于最大值；
        在闭式范围内，闭式值与度数分布的半和都等于区间边数。

        参数:
            max_n: 网格中最大的环长
            check_symmetry: 另外不做对称约简重跑一次判定器
            prune: 允许判定器剪枝（默认不剪枝）

        返回:
            VerificationReport

        异常:
            BudgetExceededError: 网格中最大的情形超过预算
        """
        if max_n < 3:
            return VerificationReport(max_n=max_n)
        largest = comb(max_n, max_n // 2) if check_symmetry else comb(max_n - 1, (max_n - 1) // 2)
        if largest > self.search_service.budget:
            raise BudgetExceededError(
                largest, self.search_service.budget,
                f"网格 n <= {max_n} 单个情形需要枚举 {largest} 个子集，预算为 {self.search_service.budget}",
            )

        report = VerificationReport(max_n=max_n)
        for n in range(3, max_n + 1):
            for s in range(1, n):
                spec = GraphSpec(n=n, s=s)
                for k in range(1, n + 1):
                    self._check_case(spec, k, report, check_symmetry, prune)
            logger.info(f"已验证 n={n}: 共 {report.cases_checked} 个情形，{len(report.violations)} 处违例")

        if report.violations:
            logger.error(f"网格 n <= {max_n} 发现 {len(report.violations)} 处违例")
        return report

    def _check_case(
        self,
        spec: GraphSpec,
        k: int,
        report: VerificationReport,
        check_symmetry: bool,
        prune: bool,
    ) -> None:
        n, s = spec.n, spec.s

        def violation(check: str, expected: Optional[int], observed: Optional[int], witness: Optional[str] = None) -> None:
            item = Violation(n=n, s=s, k=k, check=check, expected=expected, observed=observed, witness=witness)
            logger.warning(f"违例: {item}")
            report.violations.append(item)

        result = self.search_service.brute_force_max(spec, k, reduce_symmetry=True, prune=prune)
        report.cases_checked += 1
        report.subsets_examined += result.subsets_examined
        best = result.max_edges
        witness = str(result.witness)

        interval_value = self.extremal_service.interval_count(spec, k)
        if best != interval_value:
            violation("interval_optimality", interval_value, best, witness)

        exact = self.extremal_service.exact_max(spec, k).value
        if exact != best:
            violation("exact_max", best, exact, witness)

        recount = edge_count(spec, result.witness)
        if recount != best:
            violation("witness", best, recount, witness)

        _, spectral = self.bound_service.spectral_bound(spec, k)
        if spectral < best:
            violation("spectral_bound", best, spectral, witness)

        if k >= s + 2 and spec.strict_regime:
            try:
                turan = self.bound_service.turan_bound(spec, k)
            except BoundUndefinedError:
                violation("turan_bound", best, None, witness)
            else:
                if turan < best:
                    violation("turan_bound", best, turan, witness)

        if self.extremal_service.uses_closed_form(spec, k):
            closed = self.extremal_service.closed_form(spec, k)
            if closed != interval_value:
                violation("closed_form", interval_value, closed)
            degree_sum = sum(self.extremal_service.interval_degree_profile(spec, k))
            if degree_sum != 2 * closed:
                violation("degree_profile", 2 * closed, degree_sum)

        if check_symmetry:
            full = self.search_service.brute_force_max(spec, k, reduce_symmetry=False)
            if full.max_edges != best:
                violation("symmetry_reduction", best, full.max_edges, str(full.witness))
