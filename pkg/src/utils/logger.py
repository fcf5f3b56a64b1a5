"""Logging configuration using loguru."""

import sys
from pathlib import Path
from typing import Any, Dict, Optional

from loguru import logger

from src.utils.config import get_settings

# Every record carries the command (or experiment) that produced it
DEFAULT_CONTEXT = {"command": "-"}

CONSOLE_FORMAT = (
    "<green>{time:HH:mm:ss}</green> | "
    "<level>{level: <8}</level> | "
    "<magenta>{extra[command]}</magenta> | "
    "<cyan>{name}</cyan>:<cyan>{function}</cyan> - "
    "<level>{message}</level>"
)

FILE_FORMAT = "{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {extra[command]} | {name}:{function}:{line} - {message}"


def resolve_level(level: Optional[str] = None) -> str:
    """Pick the console level: explicit override, then debug mode, then settings."""
    if level:
        return level.upper()
    settings = get_settings()
    return "DEBUG" if settings.debug_mode else settings.log_level.upper()


def setup_logger(level: Optional[str] = None):
    """Configure application logging using loguru.

    Reports own standard output, so the console sink writes to standard
    error. A rotating file sink is added when ``log_file_path`` is set;
    with ``log_format="json"`` its records are serialised.

    Args:
        level: Console level overriding the configured one (CLI ``-v``/``-q``)

    Returns:
        The configured logger
    """
    settings = get_settings()
    console_level = resolve_level(level)

    logger.remove()
    logger.configure(extra=DEFAULT_CONTEXT)
    logger.add(sys.stderr, format=CONSOLE_FORMAT, level=console_level, colorize=True)

    if settings.log_file_path:
        log_path = Path(settings.log_file_path)
        log_path.parent.mkdir(parents=True, exist_ok=True)
        serialize = settings.log_format == "json"
        file_options: Dict[str, Any] = {
            "format": "{message}" if serialize else FILE_FORMAT,
            "level": settings.log_level.upper(),
            "rotation": f"{settings.log_max_size_mb} MB",
            "retention": settings.log_backup_count,
            "serialize": serialize,
        }
        logger.add(log_path, **file_options)
        logger.debug(f"File log at {log_path} ({settings.log_format})")

    return logger


def get_logger():
    """Get the configured logger instance."""
    return logger
