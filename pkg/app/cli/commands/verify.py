"""
verify: 在完整的小网格上检查区间最优性与两个上界
"""

import argparse
from typing import TextIO

from app.cli.arguments import add_format_arg, add_oracle_args
from app.core.config import settings
from app.schemas.command import OUTPUT_FORMATS, CommandRequest
from app.services.search_service import SearchService
from app.services.verification_service import VerificationService


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("verify", help="用判定器检查所有 n <= max-n、s < n、k <= n")
    parser.add_argument("--max-n", type=int, default=None,
                        help=f"最大环长（默认 {settings.VERIFY_MAX_N}）")
    add_format_arg(parser, OUTPUT_FORMATS["verify"])
    add_oracle_args(parser)


def run(request: CommandRequest, out: TextIO) -> int:
    max_n = request.max_n or settings.VERIFY_MAX_N
    # 整个网格共用一个进程池
    with SearchService(budget=request.budget, jobs=request.jobs) as search:
        report = VerificationService(search).verify_theorem_grid(max_n, prune=request.prune)
    if request.format == "json":
        out.write(report.model_dump_json(indent=2) + "\n")
    else:
        out.write(f"max_n: {report.max_n}\n")
        out.write(f"cases: {report.cases_checked}\n")
        out.write(f"subsets_examined: {report.subsets_examined}\n")
        out.write(f"violations: {len(report.violations)}\n")
        for item in report.violations:
            out.write(
                f"  n={item.n} s={item.s} k={item.k} {item.check}: "
                f"expected {item.expected}, observed {item.observed}"
                + (f", witness {item.witness}" if item.witness else "")
                + "\n"
            )
    return 0 if report.ok else 1
