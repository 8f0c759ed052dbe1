"""
Result repository writing experiment records as CSV or JSON.

Both formats carry the same long-format rows: one row per measured value,
residual or flag, plus a status row per record. Every row echoes the full
resolved configuration in `params`.
"""

import csv
import io
import logging
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional

import orjson

from hilbertlab.exceptions import MalformedInputError
from hilbertlab.schemas.experiment import ResultRecord

logger = logging.getLogger(__name__)

COLUMNS = (
    "experiment_id",
    "subcommand",
    "case",
    "kind",
    "key",
    "value",
    "passed",
    "wall_time_s",
    "error",
    "params",
)

FLOAT_FORMAT = "%.17g"


def record_rows(record: ResultRecord) -> List[Dict[str, Any]]:
    """Flatten one record into long-format rows."""
    base = {
        "experiment_id": record.experiment_id,
        "subcommand": record.subcommand,
        "case": record.case,
        "passed": record.passed,
        "wall_time_s": record.wall_time_s,
        "error": record.error or "",
        "params": record.params,
    }
    rows = []
    for kind, mapping in (("value", record.values), ("residual", record.residuals)):
        for key, value in mapping.items():
            rows.append({**base, "kind": kind, "key": key, "value": float(value)})
    for key, flag in record.flags.items():
        rows.append({**base, "kind": "flag", "key": key, "value": 1.0 if flag else 0.0})
    rows.append({**base, "kind": "status", "key": "passed", "value": 1.0 if record.passed else 0.0})
    return rows


class ResultRepository:
    """
    Writes and reads result files.

    Provides a consistent interface for both output formats so experiments
    never deal with serialization.
    """

    def __init__(self, path: Optional[Path] = None, fmt: str = "csv"):
        """
        Initialize repository with a target file.

        Args:
            path: Result file; None renders to a string for stdout
            fmt: "csv" or "json"
        """
        if fmt not in ("csv", "json"):
            raise MalformedInputError(f"unknown output format '{fmt}'")
        self.path = path
        self.fmt = fmt

    def render(self, records: Iterable[ResultRecord]) -> str:
        rows = [row for record in records for row in record_rows(record)]
        if self.fmt == "json":
            return orjson.dumps(rows, option=orjson.OPT_INDENT_2).decode()
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=COLUMNS, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow(
                {
                    **row,
                    "value": FLOAT_FORMAT % row["value"],
                    "wall_time_s": FLOAT_FORMAT % row["wall_time_s"],
                    "params": orjson.dumps(row["params"], option=orjson.OPT_SORT_KEYS).decode(),
                }
            )
        return buffer.getvalue()

    def save(self, records: Iterable[ResultRecord]) -> str:
        """
        Render the records and write them to self.path when set.

        Returns:
            The rendered text
        """
        text = self.render(records)
        if self.path is not None:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            self.path.write_text(text, encoding="utf-8")
            logger.info(f"💾 Results written to {self.path}")
        return text

    @staticmethod
    def load(path: Path) -> List[Dict[str, Any]]:
        """
        Read a result file back into rows (format from the suffix).

        Values come back as floats, `passed` as bool and `params` as a dict.
        """
        text = Path(path).read_text(encoding="utf-8")
        if Path(path).suffix == ".json":
            return orjson.loads(text)
        rows = []
        for row in csv.DictReader(io.StringIO(text)):
            row["value"] = float(row["value"])
            row["wall_time_s"] = float(row["wall_time_s"])
            row["passed"] = row["passed"] == "True"
            row["params"] = orjson.loads(row["params"])
            rows.append(row)
        return rows
