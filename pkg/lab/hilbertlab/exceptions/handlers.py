"""
Exception handlers for the command line runner.

Maps errors to process exit codes and turns them into failing result
records, so a result file always names the case that broke a run.
"""

import logging
from typing import Any, Dict, Optional

from pydantic import ValidationError

from hilbertlab.exceptions.base import AssertionFailure, ConfigError, LabError
from hilbertlab.schemas.experiment import ResultRecord

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_CONFIG = 2


def exit_code_for(exc: Optional[BaseException]) -> int:
    """
    0 without an error, 2 for configuration errors, 1 for everything else.
    """
    if exc is None:
        return EXIT_OK
    if isinstance(exc, (ConfigError, ValidationError)):
        return EXIT_CONFIG
    return EXIT_FAILURE


def failure_record(
    experiment_id: str,
    subcommand: str,
    exc: BaseException,
    params: Optional[Dict[str, Any]] = None,
    case: Optional[str] = None,
) -> ResultRecord:
    """A failing record carrying the error type, message and details."""
    details = getattr(exc, "details", {}) or {}
    if isinstance(exc, AssertionFailure):
        case = case or details.get("case")
        logger.error(f"❌ Check failed in {subcommand}: {exc}")
    elif isinstance(exc, LabError):
        logger.error(f"❌ {type(exc).__name__} in {subcommand}: {exc}")
    else:
        logger.exception(f"❌ Unexpected error in {subcommand}: {exc}")
    return ResultRecord(
        experiment_id=experiment_id,
        subcommand=subcommand,
        case=case or "error",
        params=params or {},
        passed=False,
        error=f"{type(exc).__name__}: {exc}",
    )
