from __future__ import annotations

import pytest

from larmortrack.config.run_config import MseWindow
from larmortrack.filters.base import FilterKind
from larmortrack.harness.record import MeasurementRow, RunRecord


def make_record(
    rows: list[tuple[float, float, float]],
    *,
    n_sensing: int = 0,
    overhead_s: float = 0.0,
    fail_threshold: float = 0.15,
    timing_warmup: int = 0,
    mse_window: MseWindow = MseWindow.TRACKING,
    n_params: list[int] | None = None,
    compute_ns: list[int] | None = None,
    seed: int = 0,
) -> RunRecord:
    """Record from ``(tau_s, estimate_hz, truth_hz)`` triples."""
    params = n_params or [3] * len(rows)
    timings = compute_ns or [1000] * len(rows)
    measurement_rows = []
    elapsed = 0.0
    for idx, (tau, estimate, truth) in enumerate(rows):
        measurement_rows.append(
            MeasurementRow(
                idx=idx,
                time_s=elapsed,
                tau_s=tau,
                theta_rad=0.0,
                outcome=idx % 2,
                estimate_hz=estimate,
                truth_hz=truth,
                n_params=params[idx],
                compute_ns=timings[idx],
            )
        )
        elapsed += tau + overhead_s
    return RunRecord(
        seed=seed,
        filter_kind=FilterKind.GAUSSIAN,
        rows=tuple(measurement_rows),
        n_sensing=n_sensing,
        overhead_s=overhead_s,
        fail_threshold=fail_threshold,
        timing_warmup=timing_warmup,
        mse_window=mse_window,
    )


@pytest.fixture()
def record_factory():
    return make_record
