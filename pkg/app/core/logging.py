"""
日志配置
"""

import logging
import sys
from typing import Optional

from app.core.config import settings


def setup_logger(name: Optional[str] = None) -> logging.Logger:
    """
    配置并返回日志记录器

    参数:
        name: 日志记录器名称，默认为 "cyclepow"

    返回:
        logging.Logger: 配置好的日志记录器
    """
    logger_name = name or "cyclepow"
    logger = logging.getLogger(logger_name)

    # 避免重复配置
    if logger.handlers:
        return logger

    log_level = getattr(logging, settings.LOG_LEVEL.upper(), logging.WARNING)
    logger.setLevel(log_level)

    # 输出到 stderr，stdout 只留给表格等结果
    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(logging.DEBUG)

    formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )
    handler.setFormatter(formatter)

    logger.addHandler(handler)

    return logger


def set_level(level: int) -> None:
    """运行时调整应用日志级别（命令行 -v 参数）"""
    logger.setLevel(level)


# 默认应用日志记录器
logger = setup_logger("cyclepow")
