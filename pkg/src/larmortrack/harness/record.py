from __future__ import annotations

from dataclasses import dataclass, field, fields
from typing import Any

from larmortrack.config.run_config import MseWindow
from larmortrack.filters.base import FilterKind
from larmortrack.harness.metrics import (
    mean_compute_ns,
    mean_parameter_count,
    mse,
    tracking_median_parameter_count,
)

TRAJECTORY_COLUMNS = (
    "idx",
    "time_s",
    "tau_s",
    "theta_rad",
    "outcome",
    "estimate_hz",
    "truth_hz",
    "n_params",
    "compute_ns",
)
RUNS_COLUMNS = ("seed", "filter", "mse", "failed", "mean_params", "mean_compute_ns", "n_meas")


@dataclass(frozen=True)
class MeasurementRow:
    """One Ramsey measurement and the filter's state right after it.

    ``time_s`` is the laboratory time at which the measurement started and
    ``estimate_hz`` the estimate after folding in its outcome.
    """

    idx: int
    time_s: float
    tau_s: float
    theta_rad: float
    outcome: int
    estimate_hz: float
    truth_hz: float
    n_params: int
    compute_ns: int

    def to_dict(self) -> dict[str, Any]:
        return {name: getattr(self, name) for name in TRAJECTORY_COLUMNS}

    @classmethod
    def from_dict(cls, payload: dict[str, Any]) -> MeasurementRow:
        return cls(
            idx=int(payload["idx"]),
            time_s=float(payload["time_s"]),
            tau_s=float(payload["tau_s"]),
            theta_rad=float(payload["theta_rad"]),
            outcome=int(payload["outcome"]),
            estimate_hz=float(payload["estimate_hz"]),
            truth_hz=float(payload["truth_hz"]),
            n_params=int(payload["n_params"]),
            compute_ns=int(payload["compute_ns"]),
        )

    def without_timing(self) -> tuple[Any, ...]:
        return tuple(getattr(self, f.name) for f in fields(self) if f.name != "compute_ns")


@dataclass(frozen=True)
class RunSummary:
    seed: int
    filter: FilterKind
    mse: float
    failed: bool
    mean_params: float
    mean_compute_ns: float
    n_meas: int
    tracking_median_params: float
    truncated: bool = False

    def to_row(self) -> dict[str, Any]:
        return {
            "seed": self.seed,
            "filter": str(self.filter),
            "mse": self.mse,
            "failed": self.failed,
            "mean_params": self.mean_params,
            "mean_compute_ns": self.mean_compute_ns,
            "n_meas": self.n_meas,
        }


@dataclass(frozen=True)
class RunRecord:
    """Full trace of one tracking run; summaries are derived, never stored."""

    seed: int
    filter_kind: FilterKind
    rows: tuple[MeasurementRow, ...]
    n_sensing: int
    overhead_s: float
    fail_threshold: float
    timing_warmup: int
    mse_window: MseWindow = MseWindow.TRACKING
    truncated: bool = False
    config: dict[str, Any] = field(default_factory=dict, compare=False)
    config_hash: str = ""

    def __len__(self) -> int:
        return len(self.rows)

    def summary(self) -> RunSummary:
        error = mse(self)
        return RunSummary(
            seed=self.seed,
            filter=self.filter_kind,
            mse=error,
            failed=error > self.fail_threshold,
            mean_params=mean_parameter_count(self),
            mean_compute_ns=mean_compute_ns(self),
            n_meas=len(self.rows),
            tracking_median_params=tracking_median_parameter_count(self),
            truncated=self.truncated,
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "seed": self.seed,
            "filter": str(self.filter_kind),
            "n_sensing": self.n_sensing,
            "overhead_s": self.overhead_s,
            "fail_threshold": self.fail_threshold,
            "timing_warmup": self.timing_warmup,
            "mse_window": str(self.mse_window),
            "truncated": self.truncated,
            "config_hash": self.config_hash,
            "config": dict(self.config),
            "rows": [row.to_dict() for row in self.rows],
        }

    @classmethod
    def from_dict(cls, payload: dict[str, Any]) -> RunRecord:
        return cls(
            seed=int(payload["seed"]),
            filter_kind=FilterKind(payload["filter"]),
            rows=tuple(MeasurementRow.from_dict(row) for row in payload.get("rows", [])),
            n_sensing=int(payload["n_sensing"]),
            overhead_s=float(payload["overhead_s"]),
            fail_threshold=float(payload["fail_threshold"]),
            timing_warmup=int(payload["timing_warmup"]),
            mse_window=MseWindow(payload.get("mse_window", "tracking")),
            truncated=bool(payload.get("truncated", False)),
            config=dict(payload.get("config", {})),
            config_hash=str(payload.get("config_hash", "")),
        )
