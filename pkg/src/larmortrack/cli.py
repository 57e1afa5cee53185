"""Command-line interface for larmortrack.

Usage::

    uv run larmorctl track --filter gaussian --trajectory run.csv
    uv run larmorctl --config lab.cfg --out table1.csv compare --t2star 100 --overhead 10 --runs 400
    uv run larmorctl sweep --axis kappa --values 1,5,10,20 --runs-per-point 50 --workers 4
    uv run larmorctl --report markdown bench --runs 20
"""

from __future__ import annotations

import functools
import itertools
import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any

import click

from larmortrack.config import build_run_config, load_config
from larmortrack.config.builder import MHZ, US, describe_keys
from larmortrack.core.errors import ConfigError
from larmortrack.core.logging_mixin import configure_logging, get_logger
from larmortrack.filters.base import FilterKind
from larmortrack.formatters import (
    FormatterConfig,
    HumanFormatter,
    JsonFormatter,
    MarkdownFormatter,
    ReportFormatter,
)
from larmortrack.harness import SweepAxis, direct_compare, make_signal, run_tracking, sweep
from larmortrack.output import (
    ExportFormat,
    export,
    read_signal_csv,
    write_records_json,
    write_runs_csv,
    write_signal_csv,
    write_trajectory_csv,
)

if TYPE_CHECKING:
    from collections.abc import Callable

    from larmortrack.config import RunConfig
    from larmortrack.harness import ComparisonRow

_logger = get_logger("cli")

_FORMATTERS: dict[str, type[ReportFormatter]] = {
    "human": HumanFormatter,
    "json": JsonFormatter,
    "markdown": MarkdownFormatter,
}
_BUDGET_KEYS = frozenset({"total_time_ms", "measurements"})
SWEEP_MEASUREMENTS = 1000


def _config_keys_epilog() -> str:
    """Key table for --help, kept unwrapped by click's ``\\b`` paragraph marker."""
    width = max(len(name) for name, _ in describe_keys()) + 2
    lines = ["\b", "Config keys for --config (display units):"]
    lines += [f"  {name:<{width}}{description}" for name, description in describe_keys()]
    return "\n".join(lines)


class ConfigUsageError(click.ClickException):
    exit_code = 2


class OutputIOError(click.ClickException):
    exit_code = 3


@dataclass
class CliState:
    config: RunConfig
    budget_configured: bool
    out: str | None
    fmt: ExportFormat | None
    report: str
    colorize: bool

    def formatter(self, timing_only: bool = False) -> ReportFormatter:
        return _FORMATTERS[self.report](FormatterConfig(colorize=self.colorize, timing_only=timing_only))

    def out_format(self, default: ExportFormat) -> ExportFormat:
        return default if self.fmt is None else self.fmt


def _handle_errors(command: Callable[..., None]) -> Callable[..., None]:
    @functools.wraps(command)
    def wrapper(*args: Any, **kwargs: Any) -> None:
        try:
            command(*args, **kwargs)
        except ConfigError as exc:
            raise ConfigUsageError(str(exc)) from exc
        except OSError as exc:
            _logger.error("I/O failure: %s", exc)
            raise OutputIOError(str(exc)) from exc

    return wrapper


def _parse_values(_ctx: click.Context, _param: click.Parameter, raw: str | None) -> list[float] | None:
    if raw is None:
        return None
    try:
        return [float(item) for item in raw.split(",") if item.strip()]
    except ValueError as exc:
        raise click.BadParameter(f"expected comma-separated numbers, got {raw!r}") from exc


@click.group(name="larmorctl", epilog=_config_keys_epilog())
@click.option("--config", "config_path", type=str, default=None, help="key = value or YAML run config.")
@click.option("--seed", type=click.IntRange(min=0), default=None, help="Run seed (overrides --config).")
@click.option("--out", type=str, default=None, help="Write results to a local path or filesystem URI.")
@click.option(
    "--format",
    "fmt",
    type=click.Choice([f.value for f in ExportFormat], case_sensitive=False),
    default=None,
    help="File format for --out [default: json for track, csv for compare, bench and sweep].",
)
@click.option(
    "--report",
    type=click.Choice(sorted(_FORMATTERS), case_sensitive=False),
    default="human",
    show_default=True,
    help="Format of the report printed to stdout.",
)
@click.option("--no-color", is_flag=True, default=False, help="Disable coloured output.")
@click.option("-v", "--verbose", is_flag=True, default=False, help="Enable debug logging.")
@click.pass_context
def main(
    ctx: click.Context,
    config_path: str | None,
    seed: int | None,
    out: str | None,
    fmt: str | None,
    report: str,
    no_color: bool,
    verbose: bool,
) -> None:
    """Track a drifting Larmor frequency with a Gaussian-mixture or grid filter."""
    configure_logging(level=logging.DEBUG if verbose else logging.WARNING)

    values: dict[str, Any] = {}
    if config_path is not None:
        try:
            values = load_config(config_path)
        except ConfigError as exc:
            raise ConfigUsageError(f"Unable to load config '{config_path}': {exc}") from exc
        except OSError as exc:
            raise OutputIOError(f"Unable to load config '{config_path}': {exc}") from exc
    if seed is not None:
        values["seed"] = seed
    try:
        config = build_run_config(values)
    except ConfigError as exc:
        raise ConfigUsageError(str(exc)) from exc

    ctx.obj = CliState(
        config=config,
        budget_configured=bool(_BUDGET_KEYS & set(values)),
        out=out,
        fmt=None if fmt is None else ExportFormat(fmt.lower()),
        report=report.lower(),
        colorize=not no_color,
    )


@main.command()
@click.option(
    "--filter",
    "filter_kind",
    type=click.Choice([k.value for k in FilterKind], case_sensitive=False),
    default=None,
    help="Filter to run (overrides the config file).",
)
@click.option("--trajectory", type=str, default=None, help="Write the per-measurement trajectory CSV here.")
@click.option("--signal-in", type=str, default=None, help="Replay a ground-truth signal CSV.")
@click.option("--signal-out", type=str, default=None, help="Write the ground-truth signal CSV here.")
@click.pass_obj
@_handle_errors
def track(
    state: CliState,
    filter_kind: str | None,
    trajectory: str | None,
    signal_in: str | None,
    signal_out: str | None,
) -> None:
    """Run one tracking experiment.

    --out writes the full JSON record by default; with --format csv it
    writes the one-row runs summary instead.
    """
    cfg = state.config
    if filter_kind is not None:
        cfg = cfg.replace(filter_kind=FilterKind(filter_kind.lower()))

    if signal_in is not None:
        signal = read_signal_csv(signal_in, kappa=cfg.kappa, seed=cfg.seed)
    else:
        signal = make_signal(cfg)
    if signal_out is not None:
        write_signal_csv(signal, signal_out)

    record = run_tracking(cfg, signal)
    if not record.rows:
        raise ConfigUsageError("The run produced no measurements; check the budget.")
    if trajectory is not None:
        write_trajectory_csv(record, trajectory)
    if state.out is not None:
        if state.out_format(ExportFormat.JSON) is ExportFormat.JSON:
            write_records_json([record], state.out)
        else:
            write_runs_csv([record.summary()], state.out)
    click.echo(state.formatter().format_run(record))


@main.command()
@click.option("--t2star", type=float, multiple=True, help="T2* in µs (inf disables dephasing); repeatable.")
@click.option("--overhead", type=float, multiple=True, help="Overhead per measurement in µs; repeatable.")
@click.option("--kappa", type=float, default=None, help="Diffusion in MHz·Hz^1/2.")
@click.option("--runs", type=click.IntRange(min=1), default=400, show_default=True)
@click.option("--seed0", type=click.IntRange(min=0), default=None, help="First seed (default: --seed).")
@click.pass_obj
@_handle_errors
def compare(
    state: CliState,
    t2star: tuple[float, ...],
    overhead: tuple[float, ...],
    kappa: float | None,
    runs: int,
    seed0: int | None,
) -> None:
    """Grid baseline against the Gaussian filter on shared signals.

    --t2star and --overhead pair up value by value; a single value is
    reused for every row of the other.
    """
    rows = _comparison_rows(state, t2star, overhead, kappa, runs, seed0)
    if state.out is not None:
        export(rows, state.out, state.out_format(ExportFormat.CSV))
    click.echo(state.formatter().format_comparison(rows))


@main.command()
@click.option("--runs", type=click.IntRange(min=1), default=20, show_default=True)
@click.option("--seed0", type=click.IntRange(min=0), default=None, help="First seed (default: --seed).")
@click.pass_obj
@_handle_errors
def bench(state: CliState, runs: int, seed0: int | None) -> None:
    """Per-measurement compute time of both filters, sequentially on one thread."""
    rows = _comparison_rows(state, (), (), None, runs, seed0)
    if state.out is not None:
        export(rows, state.out, state.out_format(ExportFormat.CSV))
    click.echo(state.formatter(timing_only=True).format_comparison(rows))


@main.command(name="sweep")
@click.option(
    "--axis",
    type=click.Choice([a.value for a in SweepAxis], case_sensitive=False),
    required=True,
    help="kappa (MHz·Hz^1/2) or overhead (µs).",
)
@click.option("--values", callback=_parse_values, required=True, help="Comma-separated axis values.")
@click.option("--runs-per-point", type=click.IntRange(min=1), default=10, show_default=True)
@click.option("--workers", type=click.IntRange(min=1), default=1, show_default=True)
@click.pass_obj
@_handle_errors
def sweep_command(
    state: CliState,
    axis: str,
    values: list[float],
    runs_per_point: int,
    workers: int,
) -> None:
    """Mean error and parameter count of both filters along one axis."""
    sweep_axis = SweepAxis(axis.lower())
    scale = MHZ if sweep_axis is SweepAxis.KAPPA else US
    cfg = state.config
    if not state.budget_configured:
        cfg = cfg.replace(total_time=None, measurement_budget=SWEEP_MEASUREMENTS)
    points = sweep(cfg, sweep_axis, [value * scale for value in values], runs_per_point, workers=workers)
    if state.out is not None:
        export(points, state.out, state.out_format(ExportFormat.CSV))
    click.echo(state.formatter().format_sweep(points))


def _comparison_rows(
    state: CliState,
    t2star: tuple[float, ...],
    overhead: tuple[float, ...],
    kappa: float | None,
    runs: int,
    seed0: int | None,
) -> list[ComparisonRow]:
    base = state.config
    if kappa is not None:
        base = base.replace(kappa=kappa * MHZ)
    t2_values = [value * US for value in t2star] or [base.t2_star]
    overhead_values = [value * US for value in overhead] or [base.t_oh]
    if len(t2_values) != len(overhead_values) and 1 not in (len(t2_values), len(overhead_values)):
        raise ConfigError("--t2star and --overhead need matching value counts (or a single value).")
    if len(t2_values) == 1:
        t2_values *= len(overhead_values)
    if len(overhead_values) == 1:
        overhead_values *= len(t2_values)

    first_seed = base.seed if seed0 is None else seed0
    seeds = list(itertools.islice(itertools.count(first_seed), runs))
    rows: list[ComparisonRow] = []
    for t2_star, t_oh in zip(t2_values, overhead_values, strict=True):
        cfg = base.replace(t2_star=t2_star, t_oh=t_oh)
        pair = (cfg.replace(filter_kind=FilterKind.GRID), cfg.replace(filter_kind=FilterKind.GAUSSIAN))
        rows.append(direct_compare(pair, runs, seeds))
    return rows


if __name__ == "__main__":
    main()
