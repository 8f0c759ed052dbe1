"""
Command line interface.

    hilbertlab [--log-level L] [--log-format text|json] <subcommand> [options]

Exit codes: 0 when every case passed, 1 when a check failed or a run error
occurred, 2 for configuration errors.
"""

from pathlib import Path
from typing import Any, Dict, Optional
import logging

import click

from hilbertlab.cli.config import resolve_config
from hilbertlab.core.events import shutdown_event, startup_event
from hilbertlab.exceptions import AssertionFailure, ConfigError
from hilbertlab.exceptions.handlers import EXIT_OK, exit_code_for, failure_record
from hilbertlab.experiments.base import experiment_id
from hilbertlab.experiments.factory import ExperimentFactory
from hilbertlab.storage.results_repo import ResultRepository

logger = logging.getLogger(__name__)


def experiment_options(command):
    """Options shared by every subcommand; all default to None (not given)."""
    options = [
        click.option("--config", "config_file", type=click.Path(path_type=Path), help="KEY=value config file"),
        click.option("--depth", type=int, help="Truncation depth K"),
        click.option("--grid", type=int, help="Circle grid size N"),
        click.option("--order", type=int, help="Fourier truncation order M"),
        click.option("--space", "spaces", multiple=True, help="Space label: scalar or l<q>^<d>"),
        click.option("--p", "exponents", multiple=True, help="Exponent p (4/3 accepted)"),
        click.option("--operator", "operators", multiple=True, help="Operator name for materialize"),
        click.option("--trials", type=int, help="Random trials per case"),
        click.option("--restarts", type=int, help="Random restarts of the power method"),
        click.option("--iterations", type=int, help="Power method iteration cap"),
        click.option("--tol", type=float, help="Pass threshold for residuals"),
        click.option("--slack", type=float, help="Estimator slack of the norm comparison"),
        click.option("--budget", type=int, help="Sign patterns searched for m_p"),
        click.option("--seed", type=int, help="Root seed"),
        click.option("--output", type=click.Path(path_type=Path), help="Result file (stdout when absent)"),
        click.option("--format", "format", type=click.Choice(["csv", "json"]), help="Result format"),
        click.option("--progress/--no-progress", default=False, help="Show progress bars"),
    ]
    for option in reversed(options):
        command = option(command)
    return command


def run_experiment(
    subcommand: str,
    config_file: Optional[Path],
    progress: bool,
    overrides: Dict[str, Any],
    log_level: Optional[str] = None,
    log_format: Optional[str] = None,
) -> int:
    """
    Resolve the config, run the experiment, write records and return the exit code.
    """
    startup_event(level=log_level, fmt=log_format)
    code = EXIT_OK
    try:
        config = resolve_config(subcommand, config_file, overrides)
    except ConfigError as e:
        click.echo(f"Configuration error: {e}", err=True)
        code = exit_code_for(e)
        shutdown_event(code)
        return code

    run_id = experiment_id(config)
    repository = ResultRepository(config.output, config.format)
    try:
        records = ExperimentFactory.create(config, progress=progress).run()
        failed = [r for r in records if not r.passed]
        if failed:
            error = AssertionFailure(
                f"{len(failed)} of {len(records)} cases did not pass",
                {"case": failed[0].case},
            )
            code = exit_code_for(error)
            click.echo(f"FAILED: {error}", err=True)
    except Exception as e:
        records = [failure_record(run_id, subcommand, e, config.echo())]
        code = exit_code_for(e)
        click.echo(f"ERROR: {type(e).__name__}: {e}", err=True)

    text = repository.save(records)
    if config.output is None:
        click.echo(text, nl=False)
    shutdown_event(code)
    return code


@click.group()
@click.option("--log-level", default=None, help="Overrides LOG_LEVEL")
@click.option("--log-format", type=click.Choice(["text", "json"]), default=None, help="Overrides LOG_FORMAT")
@click.version_option(package_name="hilbertlab")
@click.pass_context
def cli(ctx: click.Context, log_level: Optional[str], log_format: Optional[str]):
    """Numerical lab for the dyadic and circle Hilbert transforms."""
    ctx.ensure_object(dict)
    ctx.obj["log_level"] = log_level
    ctx.obj["log_format"] = log_format


def _invoke(ctx: click.Context, subcommand: str, config_file, progress, overrides) -> None:
    code = run_experiment(
        subcommand,
        config_file,
        progress,
        overrides,
        log_level=ctx.obj.get("log_level"),
        log_format=ctx.obj.get("log_format"),
    )
    ctx.exit(code)


@cli.command("verify-lemma")
@experiment_options
@click.pass_context
def verify_lemma(ctx: click.Context, config_file, progress, **overrides):
    """c0 two ways and the quarter averages of H phi+ and H phi-."""
    _invoke(ctx, "verify-lemma", config_file, progress, overrides)


@cli.command("verify-weak-form")
@experiment_options
@click.pass_context
def verify_weak_form(ctx: click.Context, config_file, progress, **overrides):
    """E<F^H, G> = c0 E<S0 F, G> on random toss functions and lifts."""
    _invoke(ctx, "verify-weak-form", config_file, progress, overrides)


@cli.command("verify-modulation")
@experiment_options
@click.pass_context
def verify_modulation(ctx: click.Context, config_file, progress, **overrides):
    """Modulation identity, schedule dominance and the psi-averaging chain."""
    _invoke(ctx, "verify-modulation", config_file, progress, overrides)


@cli.command("verify-distribution")
@experiment_options
@click.pass_context
def verify_distribution(ctx: click.Context, config_file, progress, **overrides):
    """Law of f on the grid against the law of its lift."""
    _invoke(ctx, "verify-distribution", config_file, progress, overrides)


@cli.command("estimate-norms")
@experiment_options
@click.pass_context
def estimate_norms(ctx: click.Context, config_file, progress, **overrides):
    """s_p, h_p and m_p lower bounds and the s_p/h_p ratio."""
    _invoke(ctx, "estimate-norms", config_file, progress, overrides)


@cli.command("materialize")
@experiment_options
@click.pass_context
def materialize(ctx: click.Context, config_file, progress, **overrides):
    """Dump operator matrices as .npy files."""
    _invoke(ctx, "materialize", config_file, progress, overrides)
