"""
search: 运行穷举判定器
"""

import argparse
from typing import TextIO

from app.cli.arguments import add_format_arg, add_graph_args, add_oracle_args
from app.schemas.command import OUTPUT_FORMATS, CommandRequest
from app.schemas.cycle_power import GraphSpec
from app.services.search_service import SearchService


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("search", help="穷举搜索最优子集")
    add_graph_args(parser)
    add_format_arg(parser, OUTPUT_FORMATS["search"])
    add_oracle_args(parser)
    parser.add_argument("--all-maximizers", action="store_true",
                        help="统计全部 C(n, k) 个子集中的最优子集个数")
    parser.add_argument("--no-symmetry", action="store_true",
                        help="枚举全部子集，而不只是包含顶点 0 的子集")


def run(request: CommandRequest, out: TextIO) -> int:
    with SearchService(budget=request.budget, jobs=request.jobs) as service:
        result = service.brute_force_max(
            GraphSpec(n=request.n, s=request.s),
            request.k,
            reduce_symmetry=not request.no_symmetry,
            count_maximizers=request.all_maximizers,
            prune=request.prune,
        )
    if request.format == "json":
        out.write(result.model_dump_json(indent=2) + "\n")
        return 0
    out.write(f"max_edges: {result.max_edges}\n")
    out.write(f"witness: {result.witness}\n")
    if result.maximizer_count is not None:
        out.write(f"maximizer_count: {result.maximizer_count}\n")
    out.write(f"subsets_examined: {result.subsets_examined}\n")
    out.write(f"used_symmetry: {str(result.used_symmetry).lower()}\n")
    return 0
