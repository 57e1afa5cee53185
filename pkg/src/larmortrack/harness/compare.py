"""Paired comparison of two filters on identical ground-truth signals.

Runs execute one after another on the calling thread so the per-measurement
timings of both filters are taken under the same conditions.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

from larmortrack.core.errors import ConfigError
from larmortrack.core.logging_mixin import get_logger
from larmortrack.harness.metrics import fail_rate
from larmortrack.harness.runner import make_signal, run_tracking

if TYPE_CHECKING:
    from collections.abc import Sequence

    from larmortrack.config.run_config import RunConfig
    from larmortrack.filters.base import FilterKind
    from larmortrack.harness.record import RunRecord

_logger = get_logger("harness.compare")

BASELINE_NOTE = "grid baseline: 6-sigma truncated Gaussian convolution (scipy.ndimage), reflecting edges"
SPEEDUP_FORMULA = "speed_increase = mean baseline compute ns per measurement / mean candidate compute ns"

_SHARED_FIELDS = ("t_oh", "t2_star", "kappa", "total_time", "measurement_budget", "freq_lo", "f0")


@dataclass(frozen=True)
class ComparisonRow:
    t2_star: float
    t_oh: float
    kappa: float
    n_runs: int
    baseline: FilterKind
    candidate: FilterKind
    baseline_fail_rate: float
    candidate_fail_rate: float
    baseline_mean_mse: float
    candidate_mean_mse: float
    baseline_compute_ns: float
    candidate_compute_ns: float
    baseline_mean_params: float
    candidate_mean_params: float
    candidate_tracking_median_params: float
    records: tuple[RunRecord, ...] = field(default=(), repr=False, compare=False)

    @property
    def speed_increase(self) -> float:
        if self.candidate_compute_ns <= 0.0:
            return math.nan
        return self.baseline_compute_ns / self.candidate_compute_ns

    def to_row(self) -> dict[str, object]:
        return {
            "t2star_s": None if math.isinf(self.t2_star) else self.t2_star,
            "overhead_s": self.t_oh,
            "kappa_hz_per_sqrt_s": self.kappa,
            "n_runs": self.n_runs,
            "baseline": str(self.baseline),
            "candidate": str(self.candidate),
            "baseline_fail_rate": self.baseline_fail_rate,
            "candidate_fail_rate": self.candidate_fail_rate,
            "baseline_mean_mse": self.baseline_mean_mse,
            "candidate_mean_mse": self.candidate_mean_mse,
            "baseline_compute_ns": self.baseline_compute_ns,
            "candidate_compute_ns": self.candidate_compute_ns,
            "speed_increase": self.speed_increase,
            "baseline_mean_params": self.baseline_mean_params,
            "candidate_mean_params": self.candidate_mean_params,
            "candidate_tracking_median_params": self.candidate_tracking_median_params,
        }


def check_shared(baseline: RunConfig, candidate: RunConfig) -> None:
    mismatched = [
        name for name in _SHARED_FIELDS if getattr(baseline, name) != getattr(candidate, name)
    ]
    if baseline.tau_min != candidate.tau_min:
        mismatched.insert(0, "tau_min")
    if mismatched:
        _logger.error("Comparison configs disagree on %s", ", ".join(mismatched))
        raise ConfigError(f"Compared configurations must share {', '.join(mismatched)}")


def direct_compare(
    cfg_pair: tuple[RunConfig, RunConfig],
    n_runs: int,
    seeds: Sequence[int] | None = None,
) -> ComparisonRow:
    """Run both configurations on the same signal for every seed.

    ``seeds`` defaults to ``baseline.seed, baseline.seed + 1, ...``. The
    signal for each seed is generated once from the baseline configuration
    and replayed by both filters.
    """
    baseline_cfg, candidate_cfg = cfg_pair
    check_shared(baseline_cfg, candidate_cfg)
    if n_runs < 1:
        raise ConfigError(f"n_runs must be at least 1, got {n_runs}")
    seed_list = list(seeds) if seeds is not None else [baseline_cfg.seed + i for i in range(n_runs)]
    if len(seed_list) != n_runs:
        raise ConfigError(f"Expected {n_runs} seeds, got {len(seed_list)}")

    _logger.info(
        "Comparing %s vs %s over %d shared signals (T2*=%.3g s, t_oh=%.3g s)",
        baseline_cfg.filter_kind,
        candidate_cfg.filter_kind,
        n_runs,
        baseline_cfg.t2_star,
        baseline_cfg.t_oh,
    )
    baseline_records: list[RunRecord] = []
    candidate_records: list[RunRecord] = []
    for seed in seed_list:
        signal = make_signal(baseline_cfg.replace(seed=seed))
        baseline_records.append(run_tracking(baseline_cfg.replace(seed=seed), signal))
        candidate_records.append(run_tracking(candidate_cfg.replace(seed=seed), signal))

    baseline_summaries = [record.summary() for record in baseline_records]
    candidate_summaries = [record.summary() for record in candidate_records]
    return ComparisonRow(
        t2_star=baseline_cfg.t2_star,
        t_oh=baseline_cfg.t_oh,
        kappa=baseline_cfg.kappa,
        n_runs=n_runs,
        baseline=baseline_cfg.filter_kind,
        candidate=candidate_cfg.filter_kind,
        baseline_fail_rate=fail_rate(baseline_records, baseline_cfg.fail_threshold),
        candidate_fail_rate=fail_rate(candidate_records, candidate_cfg.fail_threshold),
        baseline_mean_mse=statistics.fmean(s.mse for s in baseline_summaries),
        candidate_mean_mse=statistics.fmean(s.mse for s in candidate_summaries),
        baseline_compute_ns=statistics.fmean(s.mean_compute_ns for s in baseline_summaries),
        candidate_compute_ns=statistics.fmean(s.mean_compute_ns for s in candidate_summaries),
        baseline_mean_params=statistics.fmean(s.mean_params for s in baseline_summaries),
        candidate_mean_params=statistics.fmean(s.mean_params for s in candidate_summaries),
        candidate_tracking_median_params=statistics.median(
            s.tracking_median_params for s in candidate_summaries
        ),
        records=(*baseline_records, *candidate_records),
    )
