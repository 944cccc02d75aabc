"""Logging setup. Results go to stdout, so logs go to stderr."""
from __future__ import annotations

import sys

from loguru import logger


def configure_logging(json_logs: bool, level: str = "WARNING") -> None:
    logger.remove()
    if json_logs:
        logger.add(sys.stderr, serialize=True, level=level)
    else:
        logger.add(sys.stderr, format="{time} | {level} | {message}", level=level)
