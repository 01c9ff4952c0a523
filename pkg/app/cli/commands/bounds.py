"""
bounds: 单个 (n, k, s) 的精确值、Turán 界与谱界
"""

import argparse
from typing import TextIO

from app.cli.arguments import add_format_arg, add_graph_args
from app.schemas.command import OUTPUT_FORMATS, CommandRequest
from app.schemas.cycle_power import GraphSpec
from app.services.bound_service import BoundService
from app.services.extremal_service import ExtremalService


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("bounds", help="精确值与 Turán 界、谱界的对比")
    add_graph_args(parser)
    add_format_arg(parser, OUTPUT_FORMATS["bounds"])


def run(request: CommandRequest, out: TextIO) -> int:
    spec = GraphSpec(n=request.n, s=request.s)
    exact = ExtremalService().exact_max(spec, request.k).value
    report = BoundService().bound_report(spec, request.k, exact)
    if request.format == "json":
        out.write(report.model_dump_json(indent=2) + "\n")
        return 0
    turan = "n/a" if report.turan is None else str(report.turan)
    out.write(f"n: {report.n}\nk: {report.k}\ns: {report.s}\n")
    out.write(f"exact: {report.exact}\n")
    out.write(f"spectral: {report.spectral_int} (raw {report.spectral_raw:.6f})\n")
    out.write(f"turan: {turan}\n")
    out.write(f"lambda2: {report.lambda2:.6f}\n")
    return 0
