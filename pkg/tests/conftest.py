"""共享 fixture 与 hypothesis 策略"""

import pytest
from hypothesis import strategies as st

from app.schemas.cycle_power import GraphSpec, VertexSubset
from app.services.bound_service import BoundService
from app.services.extremal_service import ExtremalService
from app.services.report_service import ReportService
from app.services.search_service import SearchService


@pytest.fixture
def extremal():
    return ExtremalService(verify=True)


@pytest.fixture
def bounds():
    return BoundService()


@pytest.fixture
def search():
    return SearchService(budget=5_000_000, jobs=1)


@pytest.fixture
def reports():
    return ReportService()


@st.composite
def graph_specs(draw, max_n: int = 40, sparse: bool = False):
    """3 <= n <= max_n 的 GraphSpec；sparse 时保证 n >= 2s+1"""
    n = draw(st.integers(3, max_n))
    top = (n - 1) // 2 if sparse else n - 1
    s = draw(st.integers(1, max(1, top)))
    return GraphSpec(n=n, s=s)


@st.composite
def specs_and_subsets(draw, max_n: int = 40, sparse: bool = False):
    spec = draw(graph_specs(max_n=max_n, sparse=sparse))
    mask = draw(st.integers(0, (1 << spec.n) - 1))
    return spec, VertexSubset(n=spec.n, mask=mask)
