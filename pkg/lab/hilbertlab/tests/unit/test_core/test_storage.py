"""
Unit tests for the result repository.
"""

import orjson
import pytest

from hilbertlab.exceptions import MalformedInputError
from hilbertlab.schemas.experiment import ExperimentConfig, ResultRecord
from hilbertlab.storage import COLUMNS, ResultRepository, record_rows


@pytest.fixture
def records():
    params = ExperimentConfig(subcommand="verify-lemma", depth=2).echo()
    return [
        ResultRecord(
            experiment_id="verify-lemma-abc",
            subcommand="verify-lemma",
            case="c0",
            params=params,
            values={"c0": 0.7424537454393},
            residuals={"quadrature_vs_series": 1e-13},
            flags={"converged": True},
            wall_time_s=0.25,
        ),
        ResultRecord(
            experiment_id="verify-lemma-abc",
            subcommand="verify-lemma",
            case="broken",
            params=params,
            passed=False,
            error="AccuracyError: no luck",
        ),
    ]


class TestRecordRows:
    """Test suite for record_rows."""

    def test_long_format(self, records):
        """Test one row per value, residual and flag plus a status row."""
        # Act
        rows = record_rows(records[0])

        # Assert
        assert [(row["kind"], row["key"]) for row in rows] == [
            ("value", "c0"),
            ("residual", "quadrature_vs_series"),
            ("flag", "converged"),
            ("status", "passed"),
        ]
        assert rows[2]["value"] == 1.0
        assert all(row["params"]["depth"] == 2 for row in rows)

    def test_failed_record_has_status_row(self, records):
        """Test that a record without values still yields a row."""
        # Act
        rows = record_rows(records[1])

        # Assert
        assert len(rows) == 1
        assert rows[0]["value"] == 0.0
        assert rows[0]["error"] == "AccuracyError: no luck"


class TestResultRepository:
    """Test suite for ResultRepository."""

    def test_csv_round_trip(self, records, tmp_path):
        """Test that CSV rows load back with types restored."""
        # Arrange
        path = tmp_path / "out" / "lemma.csv"
        repo = ResultRepository(path, "csv")

        # Act
        text = repo.save(records)
        rows = ResultRepository.load(path)

        # Assert
        assert text.splitlines()[0] == ",".join(COLUMNS)
        assert len(rows) == 5
        assert rows[0]["value"] == 0.7424537454393
        assert rows[1]["value"] == 1e-13
        assert rows[0]["passed"] is True
        assert rows[-1]["passed"] is False
        assert rows[0]["params"]["subcommand"] == "verify-lemma"

    def test_json_round_trip(self, records, tmp_path):
        """Test that JSON rows keep their types."""
        # Arrange
        path = tmp_path / "lemma.json"

        # Act
        ResultRepository(path, "json").save(records)
        rows = ResultRepository.load(path)

        # Assert
        assert len(rows) == 5
        assert rows[0]["value"] == 0.7424537454393
        assert rows[-1]["error"] == "AccuracyError: no luck"
        assert rows[0]["params"]["depth"] == 2

    def test_render_without_path(self, records, tmp_path):
        """Test that a repository without a path only renders."""
        # Act
        text = ResultRepository(None, "json").save(records)

        # Assert
        assert len(orjson.loads(text)) == 5
        assert list(tmp_path.iterdir()) == []

    def test_unknown_format(self):
        """Test that only csv and json are accepted."""
        # Act & Assert
        with pytest.raises(MalformedInputError):
            ResultRepository(None, "parquet")
