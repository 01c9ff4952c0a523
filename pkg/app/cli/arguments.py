"""
各子命令共用的参数定义
"""

import argparse


def add_graph_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=int, required=True, help="环长")
    parser.add_argument("--k", type=int, required=True, help="子集大小")
    parser.add_argument("--s", type=int, required=True, help="幂次（邻接半径）")


def add_format_arg(parser: argparse.ArgumentParser, choices: tuple) -> None:
    parser.add_argument("--format", default="plain", choices=choices, help="输出格式")


def add_oracle_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--jobs", type=int, default=None, help="判定器进程数")
    parser.add_argument("--budget", type=int, default=None,
                        help="允许枚举的最大子集数（环境变量 CYCLEPOW_BUDGET）")
    parser.add_argument("--prune", action="store_true", help="剪掉无法超过当前最优值的前缀")
