"""
Storage package - result files.
"""

from hilbertlab.storage.results_repo import COLUMNS, ResultRepository, record_rows

__all__ = ["COLUMNS", "ResultRepository", "record_rows"]
