"""
Integration tests for the command line interface.

Tests the subcommands end to end including:
- Result rendering to stdout and to files
- Exit codes 0 (passed), 1 (failed check or run error), 2 (configuration)
- Config files and option precedence
- Global logging options
"""

import orjson
import pytest
from click.testing import CliRunner

from hilbertlab.cli import cli
from hilbertlab.storage import COLUMNS, ResultRepository


class TestVerifyCommands:
    """Integration tests for the verify-* subcommands."""

    def test_verify_lemma_passes(self, cli_runner: CliRunner, output_dir):
        """Test verify-lemma prints CSV records and exits 0."""
        # Act
        result = cli_runner.invoke(cli, ["verify-lemma"])

        # Assert
        assert result.exit_code == 0, result.stderr
        lines = result.stdout.splitlines()
        assert lines[0] == ",".join(COLUMNS)
        assert any(",c0,value,c0," in line for line in lines)

    def test_verify_lemma_fails_on_impossible_tolerance(self, cli_runner: CliRunner, output_dir):
        """Test that a failed check gives exit code 1."""
        # Act
        result = cli_runner.invoke(cli, ["verify-lemma", "--tol", "1e-300"])

        # Assert
        assert result.exit_code == 1
        assert "FAILED" in result.stderr

    def test_verify_weak_form_json(self, cli_runner: CliRunner, output_dir):
        """Test JSON output on stdout."""
        # Act
        result = cli_runner.invoke(
            cli,
            ["verify-weak-form", "--depth", "1", "--trials", "1", "--tol", "1e-8", "--format", "json"],
        )

        # Assert
        assert result.exit_code == 0, result.stderr
        rows = orjson.loads(result.stdout)
        cases = {row["case"] for row in rows}
        assert cases == {"scalar/toss/0", "scalar/lift/0"}
        assert all(row["params"]["depth"] == 1 for row in rows)

    def test_verify_modulation(self, cli_runner: CliRunner, output_dir):
        """Test verify-modulation at a small depth."""
        # Act
        result = cli_runner.invoke(
            cli, ["verify-modulation", "--depth", "1", "--order", "3", "--trials", "1"]
        )

        # Assert
        assert result.exit_code == 0, result.stderr
        assert "undersized_schedule" in result.stdout

    def test_verify_distribution_to_file(self, cli_runner: CliRunner, output_dir):
        """Test --output writes the file and keeps stdout empty."""
        # Arrange
        target = output_dir / "runs" / "distribution.csv"

        # Act
        result = cli_runner.invoke(
            cli,
            ["verify-distribution", "--depth", "2", "--trials", "1", "--p", "2", "--p", "4/3", "--output", str(target)],
        )

        # Assert
        assert result.exit_code == 0, result.stderr
        assert result.stdout == ""
        rows = ResultRepository.load(target)
        assert {row["case"] for row in rows} == {"p=2/scalar/0", "p=1.33333/scalar/0"}
        assert rows[0]["params"]["exponents"] == pytest.approx([2.0, 4.0 / 3.0])

    def test_budget_error_becomes_failure_record(self, cli_runner: CliRunner, output_dir):
        """Test that a run error is reported as a failing record with exit code 1."""
        # Act
        result = cli_runner.invoke(cli, ["verify-distribution", "--depth", "9", "--trials", "1"])

        # Assert
        assert result.exit_code == 1
        assert "ERROR: BudgetError" in result.stderr
        assert "BudgetError" in result.stdout


class TestConfiguration:
    """Integration tests for configuration handling."""

    def test_invalid_grid(self, cli_runner: CliRunner, output_dir):
        """Test that an invalid option value gives exit code 2."""
        # Act
        result = cli_runner.invoke(cli, ["estimate-norms", "--grid", "100"])

        # Assert
        assert result.exit_code == 2
        assert "Configuration error" in result.stderr
        assert result.stdout == ""

    def test_unknown_config_key(self, cli_runner: CliRunner, output_dir):
        """Test that unknown keys in a config file give exit code 2."""
        # Arrange
        config = output_dir / "run.env"
        config.write_text("depth=2\nwidth=3\n")

        # Act
        result = cli_runner.invoke(cli, ["verify-distribution", "--config", str(config)])

        # Assert
        assert result.exit_code == 2
        assert "width" in result.stderr

    def test_command_line_overrides_config_file(self, cli_runner: CliRunner, output_dir):
        """Test precedence: command line over config file."""
        # Arrange
        config = output_dir / "run.env"
        config.write_text("depth=5\ntrials=1\nspaces=scalar,l2^2\n")

        # Act
        result = cli_runner.invoke(
            cli, ["verify-distribution", "--config", str(config), "--depth", "1", "--format", "json"]
        )

        # Assert
        assert result.exit_code == 0, result.stderr
        rows = orjson.loads(result.stdout)
        assert {row["params"]["depth"] for row in rows} == {1}
        assert {row["case"] for row in rows} == {"p=2/scalar/0", "p=2/l2^2/0"}


class TestNormsAndMaterialize:
    """Integration tests for estimate-norms and materialize."""

    def test_estimate_norms_at_two(self, cli_runner: CliRunner, output_dir):
        """Test the comparison at p = 2."""
        # Act
        result = cli_runner.invoke(
            cli,
            [
                "estimate-norms", "--p", "2", "--depth", "2", "--grid", "16",
                "--restarts", "2", "--iterations", "20", "--budget", "4", "--format", "json",
            ],
        )

        # Assert
        assert result.exit_code == 0, result.stderr
        rows = orjson.loads(result.stdout)
        values = {row["key"]: row["value"] for row in rows if row["kind"] == "value"}
        assert values["s_p_lower"] == pytest.approx(1.0, abs=1e-9)
        assert values["h_p_lower"] == pytest.approx(1.0, abs=1e-9)

    def test_materialize_writes_matrices(self, cli_runner: CliRunner, output_dir):
        """Test that .npy files land next to the result file."""
        # Arrange
        target = output_dir / "matrices" / "materialize.csv"

        # Act
        result = cli_runner.invoke(
            cli,
            ["materialize", "--operator", "S0", "--operator", "classical_shift", "--depth", "1", "--output", str(target)],
        )

        # Assert
        assert result.exit_code == 0, result.stderr
        assert len(list(target.parent.glob("*_S0_scalar.npy"))) == 1
        assert len(list(target.parent.glob("*_classical_shift_scalar.npy"))) == 1

    def test_materialize_default_directory(self, cli_runner: CliRunner, output_dir):
        """Test the LAB_OUTPUT_DIR fallback without --output."""
        # Act
        result = cli_runner.invoke(cli, ["materialize", "--depth", "1"])

        # Assert
        assert result.exit_code == 0, result.stderr
        assert len(list((output_dir / "results").glob("*.npy"))) == 1

    def test_records_without_output_go_to_stdout(self, cli_runner: CliRunner, output_dir):
        """Test that only materialize uses LAB_OUTPUT_DIR."""
        # Act
        result = cli_runner.invoke(cli, ["verify-distribution", "--depth", "1", "--trials", "1"])

        # Assert
        assert result.exit_code == 0, result.stderr
        assert result.stdout.startswith(",".join(COLUMNS))
        assert not (output_dir / "results").exists()


class TestGlobalOptions:
    """Integration tests for the group options."""

    def test_json_logs(self, cli_runner: CliRunner, output_dir):
        """Test --log-format json writes JSON lines to stderr."""
        # Act
        result = cli_runner.invoke(
            cli, ["--log-format", "json", "verify-distribution", "--depth", "1", "--trials", "1"]
        )

        # Assert
        assert result.exit_code == 0, result.stderr
        first = orjson.loads(result.stderr.splitlines()[0])
        assert first["level"] == "INFO"
        assert first["logger"] == "hilbertlab.core.events"

    def test_help_lists_subcommands(self, cli_runner: CliRunner):
        """Test the group help."""
        # Act
        result = cli_runner.invoke(cli, ["--help"])

        # Assert
        assert result.exit_code == 0
        for name in ("verify-lemma", "verify-weak-form", "estimate-norms", "materialize"):
            assert name in result.stdout
