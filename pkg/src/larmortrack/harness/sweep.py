from __future__ import annotations

import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING

from larmortrack.core.errors import ConfigError
from larmortrack.core.logging_mixin import get_logger
from larmortrack.filters.base import FilterKind
from larmortrack.harness.runner import run_tracking
from larmortrack.simulation.seeding import derived_seed

if TYPE_CHECKING:
    from collections.abc import Sequence

    from larmortrack.config.run_config import RunConfig
    from larmortrack.harness.record import RunSummary

_logger = get_logger("harness.sweep")

_FILTER_ORDER = (FilterKind.GAUSSIAN, FilterKind.GRID)


class SweepAxis(Enum):
    KAPPA = "kappa"
    OVERHEAD = "overhead"

    def __str__(self) -> str:
        return self.value

    @property
    def field(self) -> str:
        return "kappa" if self is SweepAxis.KAPPA else "t_oh"


@dataclass(frozen=True)
class SweepPoint:
    axis: SweepAxis
    value: float
    runs: int
    gaussian_mean_mse: float
    grid_mean_mse: float
    gaussian_mean_params: float
    grid_mean_params: float
    gaussian_fail_rate: float
    grid_fail_rate: float
    gaussian_tracking_median_params: float

    def to_row(self) -> dict[str, object]:
        return {
            "axis": str(self.axis),
            "value": self.value,
            "runs": self.runs,
            "gaussian_mean_mse": self.gaussian_mean_mse,
            "grid_mean_mse": self.grid_mean_mse,
            "gaussian_mean_params": self.gaussian_mean_params,
            "grid_mean_params": self.grid_mean_params,
            "gaussian_fail_rate": self.gaussian_fail_rate,
            "grid_fail_rate": self.grid_fail_rate,
            "gaussian_tracking_median_params": self.gaussian_tracking_median_params,
        }


def sweep_tasks(
    base_cfg: RunConfig,
    axis: SweepAxis,
    values: Sequence[float],
    runs_per_point: int,
) -> list[RunConfig]:
    """One config per (value, filter, run), each with its own signal seed."""
    tasks: list[RunConfig] = []
    for value_index, value in enumerate(values):
        point_cfg = base_cfg.replace(**{axis.field: value})
        for filter_index, kind in enumerate(_FILTER_ORDER):
            for run_index in range(runs_per_point):
                seed = derived_seed(base_cfg.seed, value_index, run_index, filter_index)
                tasks.append(point_cfg.replace(filter_kind=kind, seed=seed))
    return tasks


def sweep(
    base_cfg: RunConfig,
    axis: SweepAxis,
    values: Sequence[float],
    runs_per_point: int,
    workers: int = 1,
) -> list[SweepPoint]:
    """Mean error and parameter count of both filters at every axis value.

    Every run draws a fresh signal. With ``workers > 1`` runs are spread
    over a process pool; results are collected in task order either way.
    """
    if not values:
        raise ConfigError("sweep needs at least one value.")
    if runs_per_point < 1:
        raise ConfigError(f"runs_per_point must be at least 1, got {runs_per_point}")
    tasks = sweep_tasks(base_cfg, axis, values, runs_per_point)
    _logger.info("Sweeping %s over %d values, %d runs in total", axis, len(values), len(tasks))

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            summaries = list(pool.map(_run_summary, tasks, chunksize=max(1, len(tasks) // (4 * workers))))
    else:
        summaries = [_run_summary(task) for task in tasks]

    points: list[SweepPoint] = []
    per_point = len(_FILTER_ORDER) * runs_per_point
    for value_index, value in enumerate(values):
        chunk = summaries[value_index * per_point : (value_index + 1) * per_point]
        gaussian = chunk[:runs_per_point]
        grid = chunk[runs_per_point:]
        points.append(
            SweepPoint(
                axis=axis,
                value=value,
                runs=runs_per_point,
                gaussian_mean_mse=statistics.fmean(s.mse for s in gaussian),
                grid_mean_mse=statistics.fmean(s.mse for s in grid),
                gaussian_mean_params=statistics.fmean(s.mean_params for s in gaussian),
                grid_mean_params=statistics.fmean(s.mean_params for s in grid),
                gaussian_fail_rate=sum(s.failed for s in gaussian) / runs_per_point,
                grid_fail_rate=sum(s.failed for s in grid) / runs_per_point,
                gaussian_tracking_median_params=statistics.median(s.tracking_median_params for s in gaussian),
            )
        )
        _logger.debug("Sweep point %s=%g done", axis, value)
    return points


def _run_summary(cfg: RunConfig) -> RunSummary:
    return run_tracking(cfg).summary()
