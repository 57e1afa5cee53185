"""Tracking-quality metrics.

The tracking error is the time-weighted mean squared deviation between the
estimate and the true frequency, in MHz²:

    mse = sum(dt_n * ((truth_n - estimate_n) / 1 MHz)**2) / sum(dt_n)

with ``dt_n = tau_n + t_oh``. By default the sums run over the tracking
phase only; the sensing phase starts from a flat prior and its first
estimates are arbitrary.
"""

from __future__ import annotations

import math
import statistics
from typing import TYPE_CHECKING

from larmortrack.config.run_config import MseWindow

if TYPE_CHECKING:
    from collections.abc import Sequence

    from larmortrack.harness.record import MeasurementRow, RunRecord

HZ_PER_MHZ = 1e6
MSE_FORMULA = "mse = sum((tau_n + t_oh) * (truth_n - estimate_n)^2) / sum(tau_n + t_oh), MHz^2"


def error_window(record: RunRecord) -> Sequence[MeasurementRow]:
    if record.mse_window is MseWindow.TRACKING and record.n_sensing < len(record.rows):
        return record.rows[record.n_sensing :]
    return record.rows


def mse(record: RunRecord) -> float:
    rows = error_window(record)
    if not rows:
        raise ValueError("Cannot compute the tracking error of an empty record.")
    weights = [row.tau_s + record.overhead_s for row in rows]
    total = math.fsum(weights)
    weighted = math.fsum(
        weight * ((row.truth_hz - row.estimate_hz) / HZ_PER_MHZ) ** 2
        for weight, row in zip(weights, rows, strict=True)
    )
    return weighted / total


def fail_rate(records: Sequence[RunRecord], threshold: float) -> float:
    """Fraction of runs whose tracking error exceeds ``threshold``."""
    if not records:
        raise ValueError("fail_rate needs at least one record.")
    failures = sum(1 for record in records if mse(record) > threshold)
    return failures / len(records)


def mean_parameter_count(record: RunRecord) -> float:
    """Mean over every measurement, sensing phase included."""
    if not record.rows:
        return 0.0
    return statistics.fmean(row.n_params for row in record.rows)


def tracking_median_parameter_count(record: RunRecord) -> float:
    tracking = record.rows[record.n_sensing :] or record.rows
    if not tracking:
        return 0.0
    return float(statistics.median(row.n_params for row in tracking))


def mean_compute_ns(record: RunRecord) -> float:
    """Mean pipeline time per measurement after the warm-up measurements."""
    timed = record.rows[record.timing_warmup :] or record.rows
    if not timed:
        return 0.0
    return statistics.fmean(row.compute_ns for row in timed)
