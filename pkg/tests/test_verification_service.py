"""用判定器在网格上验证精确值与上界"""

import pytest

from app.core.errors import BudgetExceededError
from app.services.search_service import SearchService
from app.services.verification_service import VerificationService


def test_smallest_grid():
    report = VerificationService().verify_theorem_grid(3)
    # s 取 {1, 2}，k 取 {1, 2, 3}
    assert report.cases_checked == 6
    assert report.ok
    assert report.violations == []


def test_grid_with_symmetry_and_pruning():
    service = VerificationService(SearchService(jobs=1))
    report = service.verify_theorem_grid(8, check_symmetry=True, prune=True)
    assert report.ok, report.violations
    assert report.cases_checked == sum(n * (n - 1) for n in range(3, 9))


@pytest.mark.slow
def test_full_grid():
    report = VerificationService(SearchService(jobs=1)).verify_theorem_grid(14)
    assert report.ok, report.violations
    assert report.cases_checked == sum(n * (n - 1) for n in range(3, 15))
    assert report.subsets_examined > report.cases_checked


def test_grid_refused_over_budget():
    service = VerificationService(SearchService(budget=10))
    with pytest.raises(BudgetExceededError) as info:
        service.verify_theorem_grid(8)
    assert info.value.projected == 35


def test_violations_are_recorded_not_raised(monkeypatch):
    service = VerificationService()
    monkeypatch.setattr(service.bound_service, "spectral_bound", lambda spec, k: (0.0, 0))
    report = service.verify_theorem_grid(4)
    assert not report.ok
    assert {item.check for item in report.violations} == {"spectral_bound"}
    first = report.violations[0]
    assert (first.n, first.s, first.k) == (3, 1, 2)
    assert (first.expected, first.observed, first.witness) == (1, 0, "{0,1}")


def test_pooled_grid_matches_serial():
    serial = VerificationService(SearchService(jobs=1)).verify_theorem_grid(6)
    with SearchService(jobs=2, parallel_min_subsets=1) as search:
        pooled = VerificationService(search).verify_theorem_grid(6)
        assert search._pool is not None
    assert pooled == serial
