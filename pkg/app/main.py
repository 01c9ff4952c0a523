"""
命令行入口: python -m app.main <子命令> ...

退出码: 0 成功，1 验证失败，2 用法错误，3 超出预算。
"""

import logging
import sys
from contextlib import redirect_stdout
from typing import List, Optional, TextIO

from pydantic import ValidationError

from app.cli import COMMANDS, build_parser
from app.core.errors import CyclePowerError
from app.core.logging import logger, set_level
from app.schemas.command import CommandRequest

EXIT_USAGE = 2


def _first_error(error: ValidationError) -> str:
    details = error.errors()
    if not details:
        return str(error)
    return details[0]["msg"]


def main(argv: Optional[List[str]] = None, out: Optional[TextIO] = None) -> int:
    """
    解析、校验并分发一条命令

    参数:
        argv: 命令行参数，默认取 sys.argv[1:]
        out: 结果输出流，默认 sys.stdout；--version 与 --help 也写到这里

    返回:
        进程退出码
    """
    out = out or sys.stdout
    parser = build_parser()
    try:
        # argparse 直接写 sys.stdout
        with redirect_stdout(out):
            args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    if args.verbose >= 2:
        set_level(logging.DEBUG)
    elif args.verbose == 1:
        set_level(logging.INFO)

    fields = {
        name: value for name, value in vars(args).items()
        if name in CommandRequest.model_fields and value is not None
    }
    try:
        request = CommandRequest(**fields)
    except ValidationError as e:
        print(f"{parser.prog}: error: {_first_error(e)}", file=sys.stderr)
        return EXIT_USAGE

    try:
        return COMMANDS[request.subcommand].run(request, out)
    except CyclePowerError as e:
        logger.debug(f"{type(e).__name__}: {e.detail}")
        print(f"{parser.prog}: error: {e.detail}", file=sys.stderr)
        return e.exit_code
    except ValidationError as e:
        print(f"{parser.prog}: error: {_first_error(e)}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
