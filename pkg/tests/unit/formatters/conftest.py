from __future__ import annotations

import math

import pytest

from larmortrack.filters.base import FilterKind
from larmortrack.harness.compare import ComparisonRow
from larmortrack.harness.record import MeasurementRow, RunRecord
from larmortrack.harness.sweep import SweepAxis, SweepPoint


def _rows(errors_mhz: list[float]) -> tuple[MeasurementRow, ...]:
    return tuple(
        MeasurementRow(
            idx=i,
            time_s=i * 10.02e-6,
            tau_s=20e-9,
            theta_rad=0.5,
            outcome=i % 2,
            estimate_hz=21.3e6 + err * 1e6,
            truth_hz=21.3e6,
            n_params=9,
            compute_ns=12_000,
        )
        for i, err in enumerate(errors_mhz)
    )


def _record(errors_mhz: list[float], truncated: bool = False) -> RunRecord:
    return RunRecord(
        seed=11,
        filter_kind=FilterKind.GAUSSIAN,
        rows=_rows(errors_mhz),
        n_sensing=1,
        overhead_s=10e-6,
        fail_threshold=0.15,
        timing_warmup=0,
        truncated=truncated,
        config_hash="abc123",
    )


@pytest.fixture()
def good_record() -> RunRecord:
    return _record([3.0, 0.1, -0.1, 0.0])


@pytest.fixture()
def failed_record() -> RunRecord:
    return _record([0.0, 2.0, 2.0], truncated=True)


@pytest.fixture()
def comparison_rows() -> list[ComparisonRow]:
    return [
        ComparisonRow(
            t2_star=t2,
            t_oh=t_oh,
            kappa=10e6,
            n_runs=400,
            baseline=FilterKind.GRID,
            candidate=FilterKind.GAUSSIAN,
            baseline_fail_rate=base_fr,
            candidate_fail_rate=cand_fr,
            baseline_mean_mse=0.05,
            candidate_mean_mse=0.07,
            baseline_compute_ns=96_000.0,
            candidate_compute_ns=12_000.0,
            baseline_mean_params=10240.0,
            candidate_mean_params=8.6,
            candidate_tracking_median_params=6.0,
        )
        for t2, t_oh, base_fr, cand_fr in [(100e-6, 10e-6, 0.005, 0.01), (math.inf, 2e-6, 0.995, 0.21)]
    ]


@pytest.fixture()
def sweep_points() -> list[SweepPoint]:
    return [
        SweepPoint(
            axis=SweepAxis.KAPPA,
            value=value,
            runs=10,
            gaussian_mean_mse=0.01 * value / 1e6,
            grid_mean_mse=0.008 * value / 1e6,
            gaussian_mean_params=8.4,
            grid_mean_params=10240.0,
            gaussian_fail_rate=0.1,
            grid_fail_rate=0.0,
            gaussian_tracking_median_params=6.0,
        )
        for value in (1e6, 10e6)
    ]
