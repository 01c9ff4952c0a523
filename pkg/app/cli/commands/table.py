"""
table: 复现已发表的对比表，或按描述文件制表
"""

import argparse
import sys
from pathlib import Path
from typing import TextIO

from app.cli.arguments import add_format_arg
from app.core.errors import DomainError
from app.schemas.command import OUTPUT_FORMATS, CommandRequest
from app.services.report_service import ReportService


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("table", help="精确值与上界的对比表")
    parser.add_argument("--spec", dest="spec_file", type=Path, default=None,
                        help="第一行为 n，其后每行一个 k,s 对；默认使用已发表的表格")
    add_format_arg(parser, OUTPUT_FORMATS["table"])
    parser.add_argument("--with-raw", action="store_true", help="JSON 中附带取整前的谱界")
    parser.add_argument("--check", action="store_true", help="与已发表的数值核对")


def run(request: CommandRequest, out: TextIO) -> int:
    service = ReportService()
    if request.spec_file is None:
        table_spec = service.builtin_table1()
    else:
        try:
            text = request.spec_file.read_text(encoding="utf-8")
        except OSError as e:
            raise DomainError(f"无法读取表格描述文件 {request.spec_file}: {e}") from e
        table_spec = service.parse_table_spec(text)

    rows = service.build_table(table_spec)
    out.write(service.render(rows, request.format, include_raw=request.with_raw))

    if not request.check:
        return 0
    mismatches = service.compare_with_reference(rows)
    for item in mismatches:
        print(
            f"不一致 k={item.k} s={item.s} {item.column}: 已发表 {item.expected}，计算得 {item.observed}",
            file=sys.stderr,
        )
    # 谱界差 1 以内可以接受
    tolerated = all(item.column == "spectral" and item.within_one for item in mismatches)
    return 0 if tolerated else 1
