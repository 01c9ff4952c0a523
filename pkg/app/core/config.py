"""
应用配置
"""

from pathlib import Path

from pydantic_settings import BaseSettings, SettingsConfigDict

# 项目根目录（假设 config.py 位于 app/core/ 下）
PROJECT_ROOT = Path(__file__).parent.parent.parent.resolve()


class Settings(BaseSettings):
    """运行时配置，读取 CYCLEPOW_* 环境变量或 .env 文件"""

    # 项目信息
    PROJECT_NAME: str = "cyclepow"
    VERSION: str = "0.1.0"
    DESCRIPTION: str = "圈幂图 C_n^s 中 k 个顶点诱导边数的精确值、上界与穷举验证"

    # 日志级别
    LOG_LEVEL: str = "WARNING"

    # 穷举搜索配置
    BUDGET: int = 5_000_000  # 允许枚举的最大子集数
    JOBS: int = 1
    PARALLEL_MIN_SUBSETS: int = 50_000  # 低于该子集数时不启用进程池
    DEBUG_CHECKS: bool = False

    # 精确值配置
    VERIFY_CROSS_CHECKS: bool = True

    # 稠密矩阵验证配置
    DENSE_LIMIT: int = 4096
    SPECTRAL_FLOOR_SLACK: float = 1e-9

    # 验收流程默认值
    VERIFY_MAX_N: int = 14

    model_config = SettingsConfigDict(
        env_prefix="CYCLEPOW_",
        case_sensitive=True,
        env_file=PROJECT_ROOT / ".env",
        env_file_encoding="utf-8",
        extra="ignore",  # 忽略 .env 中的多余字段
    )


settings = Settings()
