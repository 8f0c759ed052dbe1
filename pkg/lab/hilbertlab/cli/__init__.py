"""
CLI package - the click command group.
"""

from hilbertlab.cli.commands import cli, run_experiment
from hilbertlab.cli.config import resolve_config, read_config_file, parse_exponent

__all__ = ["cli", "run_experiment", "resolve_config", "read_config_file", "parse_exponent"]
