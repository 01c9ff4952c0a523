"""穷举判定器：最大值、见证子集、最优子集计数与预算保护"""

from math import comb

import pytest

from app.core.config import settings
from app.core.errors import BudgetExceededError, ConsistencyError, DomainError
from app.schemas.cycle_power import GraphSpec, VertexSubset
from app.services import search_service as search_module
from app.services.extremal_service import ExtremalService
from app.services.search_service import SearchService, future_gain_bound
from app.utils.cycle_power import edge_count


@pytest.mark.parametrize("n,k,s,expected", [(6, 3, 2, 3), (9, 4, 2, 5), (5, 5, 2, 10), (10, 1, 3, 0)])
def test_brute_force_max_values(search, n, k, s, expected):
    result = search.brute_force_max(GraphSpec(n=n, s=s), k)
    assert result.max_edges == expected
    assert edge_count(GraphSpec(n=n, s=s), result.witness) == expected


@pytest.mark.parametrize("n,k,s,expected", [(6, 3, 2, 8), (5, 5, 2, 1), (7, 3, 1, 7)])
def test_maximizer_counts(search, n, k, s, expected):
    spec = GraphSpec(n=n, s=s)
    assert search.count_maximizers(spec, k) == expected
    assert search.brute_force_max(spec, k, count_maximizers=True).maximizer_count == expected
    assert search.brute_force_max(spec, k, reduce_symmetry=False, count_maximizers=True).maximizer_count == expected


def test_non_interval_maximizers_exist(search):
    # 八面体中三角形 {1,3,5} 与区间边数相同
    spec = GraphSpec(n=6, s=2)
    assert edge_count(spec, VertexSubset.from_members(6, [1, 3, 5])) == 3
    assert search.count_maximizers(spec, 3) > spec.n


def test_witness_is_lexicographically_smallest(search):
    result = search.brute_force_max(GraphSpec(n=6, s=2), 3)
    assert result.witness.members == (0, 1, 2)
    assert result.used_symmetry
    assert result.subsets_examined == comb(5, 2)
    assert result.maximizer_count is None


def test_symmetry_reduction_is_sound(search):
    for n in range(3, 11):
        for s in range(1, n):
            spec = GraphSpec(n=n, s=s)
            for k in range(1, n + 1):
                reduced = search.brute_force_max(spec, k)
                full = search.brute_force_max(spec, k, reduce_symmetry=False)
                assert reduced.max_edges == full.max_edges
                assert full.subsets_examined == comb(n, k)
                # 只要存在包含顶点 0 的最优子集，全局字典序最小的最优子集就包含 0
                if 0 in full.witness:
                    assert reduced.witness == full.witness


def test_agrees_with_exact_max(search):
    extremal = ExtremalService()
    for n in range(3, 12):
        for s in range(1, n):
            spec = GraphSpec(n=n, s=s)
            for k in range(1, n + 1):
                assert search.brute_force_max(spec, k).max_edges == extremal.exact_max(spec, k).value


def test_parallel_run_is_deterministic():
    spec = GraphSpec(n=14, s=3)
    serial = SearchService(jobs=1).brute_force_max(spec, 7, count_maximizers=True)
    with SearchService(jobs=2, parallel_min_subsets=1) as search:
        parallel = search.brute_force_max(spec, 7, count_maximizers=True)
        again = search.brute_force_max(spec, 7, count_maximizers=True)
    assert parallel == serial
    assert again == serial


def test_executor_is_reused_and_closed():
    with SearchService(jobs=2, parallel_min_subsets=1) as search:
        search.brute_force_max(GraphSpec(n=10, s=2), 5)
        pool = search._pool
        assert pool is not None
        search.brute_force_max(GraphSpec(n=11, s=3), 4)
        assert search._executor() is pool
    assert search._pool is None


def test_small_searches_stay_in_process():
    with SearchService(jobs=2) as search:
        assert search.parallel_min_subsets == settings.PARALLEL_MIN_SUBSETS
        search.brute_force_max(GraphSpec(n=12, s=3), 6, count_maximizers=True)
        assert search._pool is None


def test_pruning_keeps_maximum_and_witness(search):
    for n, s in [(12, 2), (13, 3), (14, 4), (11, 5)]:
        spec = GraphSpec(n=n, s=s)
        for k in range(2, n):
            plain = search.brute_force_max(spec, k)
            pruned = search.brute_force_max(spec, k, prune=True)
            assert pruned.pruned
            assert pruned.max_edges == plain.max_edges
            assert pruned.witness == plain.witness
            assert pruned.subsets_examined <= plain.subsets_examined


def test_pruning_is_off_while_counting(search):
    result = search.brute_force_max(GraphSpec(n=8, s=2), 4, reduce_symmetry=False, count_maximizers=True, prune=True)
    assert not result.pruned
    assert result.subsets_examined == comb(8, 4)


def test_budget_exceeded():
    service = SearchService(budget=10)
    with pytest.raises(BudgetExceededError) as info:
        service.brute_force_max(GraphSpec(n=20, s=2), 10)
    assert info.value.projected == comb(19, 9) == 92378
    assert info.value.exit_code == 3
    with pytest.raises(BudgetExceededError):
        service.count_maximizers(GraphSpec(n=8, s=2), 4)


def test_k_out_of_range(search):
    with pytest.raises(DomainError):
        search.brute_force_max(GraphSpec(n=6, s=2), 0)
    with pytest.raises(DomainError):
        search.brute_force_max(GraphSpec(n=6, s=2), 7)


def test_debug_recount_catches_drift(monkeypatch):
    monkeypatch.setattr(settings, "DEBUG_CHECKS", True)
    service = SearchService(jobs=1)
    assert service.check_every == search_module.CHECK_EVERY
    assert service.brute_force_max(GraphSpec(n=12, s=3), 6).max_edges == 12

    monkeypatch.setattr(search_module, "edge_count_mask", lambda n, s, mask: -1)
    with pytest.raises(ConsistencyError):
        service.brute_force_max(GraphSpec(n=12, s=3), 6)


def test_future_gain_bound_covers_best_subsets(search):
    assert future_gain_bound(5, 0, 5, 4, 3) == 0
    for n in range(3, 12):
        for s in range(1, n):
            spec = GraphSpec(n=n, s=s)
            omega = n if spec.is_complete else s + 1
            for k in range(1, n + 1):
                best = search.brute_force_max(spec, k).max_edges
                assert future_gain_bound(0, k, k, spec.degree, omega) >= best
