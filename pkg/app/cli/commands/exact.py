"""
exact: 精确最大值及其计算方式
"""

import argparse
from typing import TextIO

from app.cli.arguments import add_format_arg, add_graph_args
from app.schemas.command import OUTPUT_FORMATS, CommandRequest
from app.schemas.cycle_power import GraphSpec
from app.services.extremal_service import ExtremalService


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("exact", help="诱导边数的精确最大值")
    add_graph_args(parser)
    add_format_arg(parser, OUTPUT_FORMATS["exact"])


def run(request: CommandRequest, out: TextIO) -> int:
    result = ExtremalService().exact_max(GraphSpec(n=request.n, s=request.s), request.k)
    if request.format == "json":
        out.write(result.model_dump_json(indent=2) + "\n")
    else:
        out.write(f"{result.value}\n")
        out.write(f"method: {result.method}\n")
    return 0
