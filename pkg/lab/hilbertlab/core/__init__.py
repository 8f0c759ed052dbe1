"""
Core module - Configuration, logging, and run lifecycle management.
"""

from hilbertlab.core.config import settings, quadrature_target, get_output_dir

# Note: startup_event, shutdown_event should be imported directly from hilbertlab.core.events
# to keep the logging setup out of the import path of the numerical packages

__all__ = [
    "settings",
    "quadrature_target",
    "get_output_dir",
]
