from __future__ import annotations

import dataclasses
import hashlib
import json
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from larmortrack.control.schedule import ControllerConfig
from larmortrack.core.errors import ConfigError
from larmortrack.filters.base import FilterKind
from larmortrack.filters.grid import default_grid_points
from larmortrack.mixture.reduce import ReductionConfig
from larmortrack.ramsey.settings import FrequencyRange


class MseWindow(Enum):
    """Which measurements the tracking error integrates over."""

    TRACKING = "tracking"
    ALL = "all"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class RunConfig:
    """Everything one tracking run depends on, in SI units (Hz, s, Hz/√s)."""

    filter_kind: FilterKind = FilterKind.GAUSSIAN
    controller: ControllerConfig = field(default_factory=ControllerConfig)
    reduction: ReductionConfig = field(default_factory=ReductionConfig)
    t_oh: float = 10e-6
    t2_star: float = 100e-6
    kappa: float = 10e6
    total_time: float | None = 5e-3
    measurement_budget: int | None = None
    grid_points: int | None = None
    grid_points_per_period: int = 10
    seed: int = 0
    fail_threshold: float = 0.15
    f0: float | None = None
    freq_lo: float = 0.0
    timing_warmup: int = 100
    mse_window: MseWindow = MseWindow.TRACKING

    def __post_init__(self) -> None:
        if (self.total_time is None) == (self.measurement_budget is None):
            raise ConfigError("Exactly one of total_time and measurement_budget must be set.")
        if self.total_time is not None and not (self.total_time > 0.0 and math.isfinite(self.total_time)):
            raise ConfigError(f"total_time must be positive and finite, got {self.total_time!r}")
        if self.measurement_budget is not None and self.measurement_budget < 1:
            raise ConfigError(f"measurement_budget must be at least 1, got {self.measurement_budget!r}")
        if not (self.t_oh >= 0.0 and math.isfinite(self.t_oh)):
            raise ConfigError(f"t_oh must be non-negative and finite, got {self.t_oh!r}")
        if not self.t2_star > 0.0:
            raise ConfigError(f"t2_star must be positive (or inf), got {self.t2_star!r}")
        if not (self.kappa >= 0.0 and math.isfinite(self.kappa)):
            raise ConfigError(f"kappa must be non-negative and finite, got {self.kappa!r}")
        if self.grid_points is not None and self.grid_points < 2:
            raise ConfigError(f"grid_points must be at least 2, got {self.grid_points!r}")
        if self.grid_points_per_period < 1:
            raise ConfigError(f"grid_points_per_period must be positive, got {self.grid_points_per_period!r}")
        if self.seed < 0:
            raise ConfigError(f"seed must be non-negative, got {self.seed!r}")
        if not self.fail_threshold >= 0.0:
            raise ConfigError(f"fail_threshold must be non-negative, got {self.fail_threshold!r}")
        if self.timing_warmup < 0:
            raise ConfigError(f"timing_warmup must be non-negative, got {self.timing_warmup!r}")
        if self.f0 is not None:
            freq_range = self.freq_range
            if not freq_range.lo <= self.f0 <= freq_range.hi:
                raise ConfigError(f"f0={self.f0!r} Hz lies outside [{freq_range.lo!r}, {freq_range.hi!r}] Hz")

    @property
    def tau_min(self) -> float:
        return self.controller.tau_min

    @property
    def freq_range(self) -> FrequencyRange:
        return FrequencyRange.for_tau_min(self.tau_min, self.freq_lo)

    @property
    def resolved_grid_points(self) -> int:
        if self.grid_points is not None:
            return self.grid_points
        return default_grid_points(self.controller.n_sensing_times, self.grid_points_per_period)

    @property
    def signal_duration(self) -> float:
        """Ground-truth span long enough for any run under this budget."""
        if self.total_time is not None:
            return self.total_time
        assert self.measurement_budget is not None
        return self.measurement_budget * (self.controller.tau_max + self.t_oh)

    def replace(self, **changes: Any) -> RunConfig:
        return dataclasses.replace(self, **changes)

    def to_dict(self) -> dict[str, Any]:
        return {
            "filter": str(self.filter_kind),
            "tau_min_s": self.tau_min,
            "n_sensing_times": self.controller.n_sensing_times,
            "g": self.controller.repetitions_base,
            "f": self.controller.repetitions_step,
            "fom_threshold": self.controller.fom_threshold,
            "sensing_order": str(self.controller.sensing_order),
            "amplitude_threshold": self.reduction.amplitude_threshold,
            "kl_threshold": self.reduction.kl_threshold,
            "max_components": self.reduction.max_components,
            "overhead_s": self.t_oh,
            "t2star_s": None if math.isinf(self.t2_star) else self.t2_star,
            "kappa_hz_per_sqrt_s": self.kappa,
            "total_time_s": self.total_time,
            "measurements": self.measurement_budget,
            "grid_points": self.resolved_grid_points,
            "seed": self.seed,
            "fail_threshold": self.fail_threshold,
            "f0_hz": self.f0,
            "freq_lo_hz": self.freq_lo,
            "timing_warmup": self.timing_warmup,
            "mse_window": str(self.mse_window),
        }

    def config_hash(self) -> str:
        """Digest of every setting except the seed, shared by all runs of one configuration."""
        payload = self.to_dict()
        payload.pop("seed")
        digest = hashlib.sha256(json.dumps(payload, sort_keys=True).encode("utf-8"))
        return digest.hexdigest()[:16]
