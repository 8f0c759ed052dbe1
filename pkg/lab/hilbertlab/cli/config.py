"""
Experiment configuration resolution: command line > config file > Settings.

Config files are flat KEY=value text read with python-dotenv. Keys are
ExperimentConfig field names (case-insensitive); list fields take comma
separated values; exponents accept fractions such as 4/3.
"""

from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional
import logging

from dotenv import dotenv_values
from pydantic import ValidationError

from hilbertlab.exceptions import ConfigError
from hilbertlab.schemas.experiment import ExperimentConfig

logger = logging.getLogger(__name__)

LIST_FIELDS = ("spaces", "exponents", "operators")


def parse_exponent(text: str) -> float:
    """'4', '1.5', '4/3' -> float."""
    try:
        return float(Fraction(str(text).strip()))
    except (ValueError, ZeroDivisionError) as e:
        raise ConfigError(f"not an exponent: '{text}'") from e


def _split(text: str) -> List[str]:
    return [item.strip() for item in text.split(",") if item.strip()]


def read_config_file(path: Path) -> Dict[str, Any]:
    """
    Parse a KEY=value file into ExperimentConfig field values.

    Raises:
        ConfigError: On a missing file, an unknown key or an empty value
    """
    path = Path(path)
    if not path.is_file():
        raise ConfigError("config file not found", {"path": str(path)})
    values: Dict[str, Any] = {}
    for key, text in dotenv_values(path).items():
        name = key.strip().lower()
        if name == "subcommand" or name not in ExperimentConfig.model_fields:
            raise ConfigError(f"unknown config key '{key}'", {"path": str(path)})
        if text is None or not text.strip():
            raise ConfigError(f"config key '{key}' has no value", {"path": str(path)})
        if name == "exponents":
            values[name] = [parse_exponent(item) for item in _split(text)]
        elif name in LIST_FIELDS:
            values[name] = _split(text)
        else:
            values[name] = text.strip()
    logger.debug(f"Config file {path}: {sorted(values)}")
    return values


def resolve_config(
    subcommand: str,
    config_file: Optional[Path] = None,
    overrides: Optional[Dict[str, Any]] = None,
) -> ExperimentConfig:
    """
    Merge defaults, the config file and command line overrides.

    Overrides that are None or empty tuples count as not given.

    Raises:
        ConfigError: If the merged values do not validate
    """
    values: Dict[str, Any] = read_config_file(config_file) if config_file else {}
    for name, value in (overrides or {}).items():
        if value is None or value == ():
            continue
        if name == "exponents":
            value = [parse_exponent(item) for item in value]
        elif isinstance(value, tuple):
            value = list(value)
        values[name] = value
    try:
        return ExperimentConfig(subcommand=subcommand, **values)
    except ValidationError as e:
        problems = "; ".join(f"{'.'.join(map(str, err['loc']))}: {err['msg']}" for err in e.errors())
        raise ConfigError(f"invalid configuration: {problems}") from e
