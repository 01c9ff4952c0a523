"""
命令行接口

每个子命令模块注册自己的解析器，并提供 run(request, out)。
"""

import argparse

from app.cli.commands import bounds, exact, search, table, verify
from app.core.config import settings

COMMANDS = {
    "exact": exact,
    "bounds": bounds,
    "table": table,
    "search": search,
    "verify": verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=settings.PROJECT_NAME,
        description=settings.DESCRIPTION,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.VERSION}")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v 输出 INFO 日志，-vv 输出 DEBUG 日志")
    subparsers = parser.add_subparsers(dest="subcommand", required=True)
    for module in COMMANDS.values():
        module.register(subparsers)
    return parser
