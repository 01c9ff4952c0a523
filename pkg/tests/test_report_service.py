"""对比表格：构建、渲染、解析及与已发表数值的核对"""

import json

import pytest

from app.core.errors import ConsistencyError, DomainError
from app.schemas.report import TableRow, TableSpec
from app.services.bound_service import BoundService
from app.services.report_service import PUBLISHED_TABLE1, ReportService


@pytest.fixture(scope="module")
def table1_rows():
    service = ReportService()
    return service.build_table(service.builtin_table1())


def test_builtin_table_order(reports):
    spec = reports.builtin_table1()
    assert spec.n == 1000
    assert spec.rows[0] == (54, 37)
    assert spec.rows[-1] == (473, 462)
    assert len(spec.rows) == 10


def test_table1_matches_published_values(table1_rows):
    for row in table1_rows:
        exact, spectral, turan = PUBLISHED_TABLE1[(row.k, row.s)]
        assert row.exact == exact
        assert row.turan == turan
        assert row.spectral == spectral
        assert row.exact <= row.spectral and row.exact <= row.turan


def test_reference_comparison(reports, table1_rows):
    mismatches = reports.compare_with_reference(table1_rows)
    assert mismatches == []

    shifted = [table1_rows[0].model_copy(update={"exact": 1296})]
    (item,) = reports.compare_with_reference(shifted)
    assert (item.column, item.expected, item.observed) == ("exact", 1295, 1296)
    assert item.within_one


def test_single_rows(reports):
    row = reports.build_row(1000, 404, 372)
    assert (row.exact, row.turan) == (80910, 81406)
    small = reports.build_row(5, 5, 2)
    assert (small.exact, small.spectral, small.turan) == (10, 10, None)
    assert small.tighter_bound == "spectral"
    assert reports.build_row(10, 1, 3).tighter_bound == "none"


def test_bound_below_exact_is_inconsistent():
    bounds = BoundService()
    bounds.spectral_bound = lambda spec, k: (0.0, 0)
    with pytest.raises(ConsistencyError):
        ReportService(bound_service=bounds).build_row(1000, 54, 37)


def test_tighter_bound_follows_k_over_s(table1_rows):
    for row in table1_rows:
        ratio = row.k / row.s
        if ratio >= 6:
            assert row.tighter_bound == "spectral"
        elif ratio <= 1.2:
            assert row.tighter_bound == "turan"


class TestRender:
    def test_csv(self, reports, table1_rows):
        text = reports.render(table1_rows, "csv")
        lines = text.splitlines()
        assert lines[0] == "k,s,exact,spectral,turan"
        assert lines[1] == "54,37,1295,1980,1431"
        assert len(lines) == 11
        assert text.endswith("\n")

    def test_csv_not_applicable(self, reports):
        rows = reports.build_table(TableSpec(n=5, rows=[(5, 2)]))
        assert reports.render(rows, "csv").splitlines()[1] == "5,2,10,10,n/a"

    def test_json(self, reports, table1_rows):
        payload = json.loads(reports.render(table1_rows, "json"))
        assert len(payload) == 10
        assert set(payload[0]) == {"k", "s", "exact", "spectral", "turan"}
        assert payload[0]["turan"] == 1431

        with_raw = json.loads(reports.render(table1_rows, "json", include_raw=True))
        assert set(with_raw[0]) == {"k", "s", "exact", "spectral", "turan", "spectral_raw"}
        assert with_raw[0]["spectral"] == int(with_raw[0]["spectral_raw"])

    def test_json_null_turan(self, reports):
        rows = reports.build_table(TableSpec(n=5, rows=[(5, 2)]))
        assert json.loads(reports.render(rows, "json"))[0]["turan"] is None

    def test_markdown(self, reports, table1_rows):
        lines = reports.render(table1_rows, "markdown").splitlines()
        assert len(lines) == 12
        assert lines[0].startswith("| k | s | Exact maximum")
        assert set(lines[1]) <= {"|", "-", ":"}
        assert lines[2] == "| 54 | 37 | 1295 | 1980 | 1431 |"

    def test_plain(self, reports, table1_rows):
        lines = reports.render(table1_rows, "plain").splitlines()
        assert len(lines) == 12
        assert lines[0].endswith("Turán bound")
        assert set(lines[1]) == {"-", " "}
        assert len({len(line) for line in lines}) == 1
        assert lines[2].split() == ["54", "37", "1295", "1980", "1431"]

    def test_errors(self, reports, table1_rows):
        with pytest.raises(DomainError):
            reports.render([], "csv")
        with pytest.raises(DomainError):
            reports.render(table1_rows, "xml")


class TestParse:
    def test_csv_rows_read_back(self, reports, table1_rows):
        parsed = reports.parse_rows_csv(reports.render(table1_rows, "csv"))
        assert [(r.k, r.s, r.exact, r.spectral, r.turan) for r in parsed] == [
            (r.k, r.s, r.exact, r.spectral, r.turan) for r in table1_rows
        ]

    def test_csv_bad_header(self, reports):
        with pytest.raises(DomainError):
            reports.parse_rows_csv("a,b\n1,2\n")

    def test_table_spec(self, reports):
        spec = reports.parse_table_spec("# comparison\n1000\n\n54,37\n 118, 53 \n")
        assert spec == TableSpec(n=1000, rows=[(54, 37), (118, 53)])

    @pytest.mark.parametrize("text", ["", "# only a comment\n", "1000\n", "1000\n54;37\n", "x\n1,1\n", "10\n11,2\n", "10\n3,10\n"])
    def test_table_spec_errors(self, reports, text):
        with pytest.raises(DomainError):
            reports.parse_table_spec(text)


def test_row_gaps():
    row = TableRow(k=54, s=37, exact=1295, spectral=1980, turan=1431)
    assert row.spectral_gap == pytest.approx(685 / 1295)
    assert row.turan_gap == pytest.approx(136 / 1295)
    assert row.tighter_bound == "turan"
