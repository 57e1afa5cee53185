from larmortrack.harness.compare import (
    BASELINE_NOTE,
    SPEEDUP_FORMULA,
    ComparisonRow,
    check_shared,
    direct_compare,
)
from larmortrack.harness.metrics import (
    MSE_FORMULA,
    fail_rate,
    mean_compute_ns,
    mean_parameter_count,
    mse,
    tracking_median_parameter_count,
)
from larmortrack.harness.record import (
    RUNS_COLUMNS,
    TRAJECTORY_COLUMNS,
    MeasurementRow,
    RunRecord,
    RunSummary,
)
from larmortrack.harness.runner import build_filter, make_signal, run_tracking
from larmortrack.harness.sweep import SweepAxis, SweepPoint, sweep, sweep_tasks

__all__ = [
    "BASELINE_NOTE",
    "MSE_FORMULA",
    "RUNS_COLUMNS",
    "SPEEDUP_FORMULA",
    "TRAJECTORY_COLUMNS",
    "ComparisonRow",
    "MeasurementRow",
    "RunRecord",
    "RunSummary",
    "SweepAxis",
    "SweepPoint",
    "build_filter",
    "check_shared",
    "direct_compare",
    "fail_rate",
    "make_signal",
    "mean_compute_ns",
    "mean_parameter_count",
    "mse",
    "run_tracking",
    "sweep",
    "sweep_tasks",
    "tracking_median_parameter_count",
]
