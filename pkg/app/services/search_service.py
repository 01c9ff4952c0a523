"""
C_n^s 中 k 元子集的穷举搜索

深度优先按递增顺序加入顶点，每加入一个顶点用一次掩码 popcount 更新诱导边数。
启用对称约简时固定顶点 0：每个子集都有一个包含 0 的旋转，而边数在旋转下不变。

按第一个自由顶点把工作切成互不相关的块；合并时先比最大值，再按块的顺序，
因此无论进程数多少，见证子集都是字典序最小的最优子集。
"""

from concurrent.futures import ProcessPoolExecutor
from math import comb
from typing import List, NamedTuple, Optional

from app.core.config import settings
from app.core.errors import BudgetExceededError, ConsistencyError, DomainError
from app.core.logging import logger
from app.schemas.cycle_power import GraphSpec, VertexSubset
from app.schemas.results import SearchResult
from app.services.bound_service import BoundService, turan_general
from app.utils.cycle_power import edge_count_mask, neighbor_masks

# DEBUG_CHECKS 打开时每隔这么多个叶子重算一次
CHECK_EVERY = 100


class ChunkTask(NamedTuple):
    n: int
    s: int
    k: int
    chosen: int
    edges: int
    size: int
    start: int
    prune: bool
    check_every: int
    degree: int
    omega: int


class ChunkOutcome(NamedTuple):
    best: int
    witness: int
    examined: int
    maximizers: int


def future_gain_bound(size: int, remaining: int, k: int, degree: int, omega: int) -> int:
    """还差 `remaining` 个顶点时，后续最多还能增加的边数"""
    # 第 i 个加入的顶点（从 0 计）最多有 min(i, degree) 个先前的邻居
    by_position = sum(min(i, degree) for i in range(size, k))
    if remaining <= omega:
        among = comb(remaining, 2)
    else:
        among = turan_general(remaining, omega)
    by_turan = remaining * min(size, degree) + among
    return min(by_position, by_turan)


def search_chunk(task: ChunkTask) -> ChunkOutcome:
    """枚举一个块前缀的全部补全"""
    n, s, k = task.n, task.s, task.k
    masks = neighbor_masks(n, s)
    best = -1
    witness = 0
    examined = 0
    maximizers = 0

    def extend(chosen: int, edges: int, size: int, start: int) -> None:
        nonlocal best, witness, examined, maximizers
        if size == k:
            examined += 1
            if task.check_every and examined % task.check_every == 0:
                recount = edge_count_mask(n, s, chosen)
                if recount != edges:
                    raise ConsistencyError(
                        f"增量计数 {edges} 与重算 {recount} 不一致，mask={chosen:b}"
                    )
            if edges > best:
                best, witness, maximizers = edges, chosen, 1
            elif edges == best:
                maximizers += 1
            return
        remaining = k - size
        if task.prune and best >= 0:
            if edges + future_gain_bound(size, remaining, k, task.degree, task.omega) <= best:
                return
        for v in range(start, n - remaining + 1):
            extend(chosen | (1 << v), edges + (chosen & masks[v]).bit_count(), size + 1, v + 1)

    extend(task.chosen, task.edges, task.size, task.start)
    return ChunkOutcome(best, witness, examined, maximizers)


class SearchService:
    """k 个顶点诱导边数最大值的穷举判定器"""

    def __init__(
        self,
        budget: Optional[int] = None,
        jobs: Optional[int] = None,
        parallel_min_subsets: Optional[int] = None,
    ):
        """
        初始化搜索服务

        参数:
            budget: 允许枚举的最大子集数，默认取 settings.BUDGET
            jobs: 计算各块的进程数，默认取 settings.JOBS
            parallel_min_subsets: 子集数低于该值时不启用进程池，
                默认取 settings.PARALLEL_MIN_SUBSETS
        """
        self.budget = budget or settings.BUDGET
        self.jobs = max(1, jobs or settings.JOBS)
        self.parallel_min_subsets = (
            settings.PARALLEL_MIN_SUBSETS if parallel_min_subsets is None else parallel_min_subsets
        )
        self.check_every = CHECK_EVERY if settings.DEBUG_CHECKS else 0
        self._pool: Optional[ProcessPoolExecutor] = None
        logger.debug(f"搜索服务初始化，预算: {self.budget}，进程数: {self.jobs}")

    def __enter__(self) -> "SearchService":
        return self

    def __exit__(self, exc_type, exc_value, traceback) -> None:
        self.close()

    def _executor(self) -> ProcessPoolExecutor:
        """首次使用时创建进程池，之后的每次搜索都复用同一个"""
        if self._pool is None:
            logger.debug(f"创建进程池，进程数: {self.jobs}")
            self._pool = ProcessPoolExecutor(max_workers=self.jobs)
        return self._pool

    def close(self) -> None:
        """关闭进程池（如已创建）"""
        if self._pool is not None:
            self._pool.shutdown()
            self._pool = None

    @staticmethod
    def projected_subsets(spec: GraphSpec, k: int, reduce_symmetry: bool) -> int:
        if reduce_symmetry:
            return comb(spec.n - 1, k - 1)
        return comb(spec.n, k)

    def _guard(self, spec: GraphSpec, k: int, reduce_symmetry: bool) -> int:
        if not 1 <= k <= spec.n:
            raise DomainError(f"k={k} 不在 [1, {spec.n}] 内")
        projected = self.projected_subsets(spec, k, reduce_symmetry)
        if projected > self.budget:
            logger.warning(
                f"拒绝搜索 n={spec.n} k={k} s={spec.s}: {projected} 个子集超过预算 {self.budget}"
            )
            raise BudgetExceededError(projected, self.budget)
        return projected

    def _tasks(self, spec: GraphSpec, k: int, reduce_symmetry: bool, prune: bool) -> List[ChunkTask]:
        n, s = spec.n, spec.s
        masks = neighbor_masks(n, s)
        common = dict(
            n=n, s=s, k=k, prune=prune, check_every=self.check_every,
            degree=spec.degree, omega=BoundService.clique_number(spec),
        )
        base, base_size, first_free = (1, 1, 1) if reduce_symmetry else (0, 0, 0)
        if base_size == k:
            return [ChunkTask(chosen=base, edges=0, size=base_size, start=first_free, **common)]
        remaining = k - base_size
        return [
            ChunkTask(
                chosen=base | (1 << f),
                edges=(base & masks[f]).bit_count(),
                size=base_size + 1,
                start=f + 1,
                **common,
            )
            for f in range(first_free, n - remaining + 1)
        ]

    def _run(self, tasks: List[ChunkTask], projected: int) -> List[ChunkOutcome]:
        if self.jobs == 1 or len(tasks) == 1 or projected < self.parallel_min_subsets:
            return [search_chunk(task) for task in tasks]
        return list(self._executor().map(search_chunk, tasks))

    @staticmethod
    def _merge(outcomes: List[ChunkOutcome]) -> ChunkOutcome:
        best, witness, examined, maximizers = -1, 0, 0, 0
        for outcome in outcomes:
            examined += outcome.examined
            if outcome.best > best:
                best, witness, maximizers = outcome.best, outcome.witness, outcome.maximizers
            elif outcome.best == best:
                maximizers += outcome.maximizers
        return ChunkOutcome(best, witness, examined, maximizers)

    def brute_force_max(
        self,
        spec: GraphSpec,
        k: int,
        reduce_symmetry: bool = True,
        count_maximizers: bool = False,
        prune: bool = False,
    ) -> SearchResult:
        """
        枚举求所有 k 元子集中 e(U) 的精确最大值

        参数:
            spec: 图 C_n^s
            k: 子集大小
            reduce_symmetry: 只枚举包含顶点 0 的子集
            count_maximizers: 同时统计全部 C(n, k) 个子集中的最优子集个数
            prune: 丢弃无法超过当前最优值的前缀

        返回:
            SearchResult

        异常:
            DomainError: k 不在 [1, n] 内
            BudgetExceededError: 预计子集数超过预算
        """
        projected = self._guard(spec, k, reduce_symmetry)
        counting_here = count_maximizers and not reduce_symmetry
        use_prune = prune and not counting_here
        tasks = self._tasks(spec, k, reduce_symmetry, use_prune)
        logger.info(
            f"搜索 n={spec.n} k={k} s={spec.s}，共 {len(tasks)} 块，"
            f"对称约简: {reduce_symmetry}，剪枝: {use_prune}"
        )
        merged = self._merge(self._run(tasks, projected))

        maximizer_count: Optional[int] = None
        if counting_here:
            maximizer_count = merged.maximizers
        elif count_maximizers:
            maximizer_count = self.count_maximizers(spec, k)

        return SearchResult(
            n=spec.n,
            k=k,
            s=spec.s,
            max_edges=merged.best,
            witness=VertexSubset(n=spec.n, mask=merged.witness),
            maximizer_count=maximizer_count,
            subsets_examined=merged.examined,
            used_symmetry=reduce_symmetry,
            pruned=use_prune,
        )

    def count_maximizers(self, spec: GraphSpec, k: int) -> int:
        """达到最大值的 k 元子集个数，旋转副本分别计数"""
        projected = self._guard(spec, k, reduce_symmetry=False)
        tasks = self._tasks(spec, k, reduce_symmetry=False, prune=False)
        return self._merge(self._run(tasks, projected)).maximizers
