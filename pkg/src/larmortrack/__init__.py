from larmortrack.config import RunConfig, build_run_config, load_config
from larmortrack.core.logging_mixin import configure_logging
from larmortrack.filters import FilterKind, GaussianFilter, GridFilter
from larmortrack.harness import (
    ComparisonRow,
    RunRecord,
    RunSummary,
    SweepAxis,
    SweepPoint,
    direct_compare,
    fail_rate,
    mse,
    run_tracking,
    sweep,
)
from larmortrack.mixture import GaussianComponent, GaussianMixture, reduce
from larmortrack.output import export
from larmortrack.ramsey import FrequencyRange, RamseySettings
from larmortrack.simulation import GroundTruthSignal, generate_ground_truth

__all__ = [
    "ComparisonRow",
    "FilterKind",
    "FrequencyRange",
    "GaussianComponent",
    "GaussianFilter",
    "GaussianMixture",
    "GridFilter",
    "GroundTruthSignal",
    "RamseySettings",
    "RunConfig",
    "RunRecord",
    "RunSummary",
    "SweepAxis",
    "SweepPoint",
    "build_run_config",
    "configure_logging",
    "direct_compare",
    "export",
    "fail_rate",
    "generate_ground_truth",
    "mse",
    "reduce",
    "run_tracking",
    "sweep",
]
