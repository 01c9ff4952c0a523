"""
对比表格：已发表的 n = 1000 表格及任意 (k, s) 列表
"""

import csv
import io
import json
from typing import Dict, List, Optional, Tuple

from app.core.errors import ConsistencyError, DomainError
from app.core.logging import logger
from app.schemas.cycle_power import GraphSpec
from app.schemas.report import ReferenceMismatch, TableRow, TableSpec
from app.services.bound_service import BoundService
from app.services.extremal_service import ExtremalService

FORMATS = ("plain", "markdown", "csv", "json")
CSV_HEADER = ["k", "s", "exact", "spectral", "turan"]
TITLES = ["k", "s", "Exact maximum", "Spectral bound", "Turán bound"]
NOT_APPLICABLE = "n/a"

TABLE1_N = 1000

# n = 1000 时已发表的 (k, s) -> (精确值, 谱界, Turán 界)
PUBLISHED_TABLE1: Dict[Tuple[int, int], Tuple[int, int, int]] = {
    (54, 37): (1295, 1980, 1431),
    (118, 53): (4823, 6149, 6849),
    (359, 16): (5608, 5737, 60691),
    (210, 115): (17480, 22511, 21945),
    (243, 175): (27125, 36369, 29403),
    (313, 295): (48675, 61627, 48828),
    (433, 196): (65562, 73512, 93331),
    (404, 372): (80910, 88116, 81406),
    (439, 384): (94656, 99895, 96141),
    (473, 462): (111573, 112499, 111628),
}


class ReportService:
    """构建、渲染与解析对比表格"""

    def __init__(
        self,
        extremal_service: Optional[ExtremalService] = None,
        bound_service: Optional[BoundService] = None,
    ):
        self.extremal_service = extremal_service or ExtremalService()
        self.bound_service = bound_service or BoundService()

    @staticmethod
    def builtin_table1() -> TableSpec:
        """已发表对比表中的十个 (k, s) 对，n = 1000，保持原顺序"""
        return TableSpec(n=TABLE1_N, rows=list(PUBLISHED_TABLE1))

    def build_row(self, n: int, k: int, s: int) -> TableRow:
        spec = GraphSpec(n=n, s=s)
        exact = self.extremal_service.exact_max(spec, k).value
        bounds = self.bound_service.bound_report(spec, k, exact)
        if exact > bounds.spectral_int or (bounds.turan is not None and exact > bounds.turan):
            raise ConsistencyError(f"上界小于精确值，n={n}, k={k}, s={s}: {bounds}")
        return TableRow(
            k=k,
            s=s,
            exact=exact,
            spectral=bounds.spectral_int,
            turan=bounds.turan,
            spectral_raw=bounds.spectral_raw,
        )

    def build_table(self, table_spec: TableSpec) -> List[TableRow]:
        """按输入顺序计算每个 (k, s) 对的精确值与两个上界"""
        rows = [self.build_row(table_spec.n, k, s) for k, s in table_spec.rows]
        logger.info(f"n={table_spec.n} 共生成 {len(rows)} 行")
        return rows

    @staticmethod
    def compare_with_reference(rows: List[TableRow]) -> List[ReferenceMismatch]:
        """生成的行与已发表 n = 1000 数值之间的差异"""
        mismatches = []
        for row in rows:
            published = PUBLISHED_TABLE1.get((row.k, row.s))
            if published is None:
                continue
            observed = {"exact": row.exact, "spectral": row.spectral, "turan": row.turan}
            for column, expected in zip(("exact", "spectral", "turan"), published):
                if observed[column] != expected:
                    mismatches.append(ReferenceMismatch(
                        k=row.k, s=row.s, column=column,
                        expected=expected, observed=observed[column],
                    ))
        for item in mismatches:
            logger.warning(f"表格不一致: {item}")
        return mismatches

    # 渲染

    @staticmethod
    def _cells(row: TableRow) -> List[str]:
        turan = NOT_APPLICABLE if row.turan is None else str(row.turan)
        return [str(row.k), str(row.s), str(row.exact), str(row.spectral), turan]

    def render(self, rows: List[TableRow], fmt: str = "plain", include_raw: bool = False) -> str:
        """
        将各行渲染为纯文本、markdown、CSV 或 JSON

        参数:
            rows: 非空的行列表
            fmt: plain、markdown、csv 或 json
            include_raw: JSON 对象中附带取整前的谱界

        异常:
            DomainError: 行列表为空或格式未知
        """
        if not rows:
            raise DomainError("没有可渲染的行")
        if fmt == "plain":
            return self._render_plain(rows)
        if fmt == "markdown":
            return self._render_markdown(rows)
        if fmt == "csv":
            return self._render_csv(rows)
        if fmt == "json":
            return self._render_json(rows, include_raw)
        raise DomainError(f"未知格式 '{fmt}'，可选: {', '.join(FORMATS)}")

    def _render_plain(self, rows: List[TableRow]) -> str:
        body = [self._cells(row) for row in rows]
        widths = [max(len(line[i]) for line in [TITLES] + body) for i in range(len(TITLES))]
        lines = ["  ".join(title.rjust(w) for title, w in zip(TITLES, widths))]
        lines.append("  ".join("-" * w for w in widths))
        for cells in body:
            lines.append("  ".join(cell.rjust(w) for cell, w in zip(cells, widths)))
        return "\n".join(lines) + "\n"

    def _render_markdown(self, rows: List[TableRow]) -> str:
        lines = ["| " + " | ".join(TITLES) + " |"]
        lines.append("|" + "|".join("---:" for _ in TITLES) + "|")
        for row in rows:
            lines.append("| " + " | ".join(self._cells(row)) + " |")
        return "\n".join(lines) + "\n"

    def _render_csv(self, rows: List[TableRow]) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for row in rows:
            writer.writerow(self._cells(row))
        return buffer.getvalue()

    @staticmethod
    def _render_json(rows: List[TableRow], include_raw: bool) -> str:
        fields = set(CSV_HEADER) | ({"spectral_raw"} if include_raw else set())
        payload = [row.model_dump(include=fields) for row in rows]
        return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"

    # 解析

    @staticmethod
    def parse_table_spec(text: str) -> TableSpec:
        """
        读取表格描述：第一行为 `n`，其后每行一个 `k,s` 对

        空行和以 '#' 开头的行会被跳过。
        """
        lines = [
            line.strip() for line in text.splitlines()
            if line.strip() and not line.strip().startswith("#")
        ]
        if not lines:
            raise DomainError("表格描述为空")
        try:
            n = int(lines[0])
            pairs = []
            for line in lines[1:]:
                k, s = (int(field) for field in line.split(","))
                pairs.append((k, s))
        except ValueError as e:
            raise DomainError(f"表格描述格式错误: {e}") from e
        if not pairs:
            raise DomainError("表格描述中没有 (k, s) 对")
        try:
            return TableSpec(n=n, rows=pairs)
        except ValueError as e:
            raise DomainError(f"表格描述无效: {e}") from e

    @staticmethod
    def parse_rows_csv(text: str) -> List[TableRow]:
        """从 CSV 渲染结果读回各行"""
        reader = csv.DictReader(io.StringIO(text))
        if reader.fieldnames != CSV_HEADER:
            raise DomainError(f"CSV 表头不符: {reader.fieldnames}")
        rows = []
        for record in reader:
            turan = record["turan"]
            rows.append(TableRow(
                k=int(record["k"]),
                s=int(record["s"]),
                exact=int(record["exact"]),
                spectral=int(record["spectral"]),
                turan=None if turan == NOT_APPLICABLE else int(turan),
            ))
        return rows
