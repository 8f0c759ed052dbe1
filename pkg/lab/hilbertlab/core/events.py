"""
Run lifecycle handlers.

Every CLI invocation calls startup_event before its experiment and
shutdown_event after it.
"""

import logging
from typing import Optional

from hilbertlab.core.config import settings
from hilbertlab.core.logging import setup_logging

logger = logging.getLogger(__name__)


def startup_event(level: Optional[str] = None, fmt: Optional[str] = None) -> None:
    """
    Execute before a run.

    Responsibilities:
    - Configure logging
    - Create the log directory
    """
    if settings.LOG_FILE:
        settings.LOG_FILE.parent.mkdir(parents=True, exist_ok=True)
    setup_logging(level=level, fmt=fmt)
    logger.info(f"🚀 Starting {settings.APP_NAME} v{settings.APP_VERSION} ({settings.ENVIRONMENT})")
    logger.debug(f"Workers: {settings.WORKERS}, output directory: {settings.LAB_OUTPUT_DIR}")


def shutdown_event(exit_code: int = 0) -> None:
    """Execute after a run, whatever its outcome."""
    logger.info(f"👋 Run finished with exit code {exit_code}")
    for handler in logging.getLogger().handlers:
        handler.flush()
