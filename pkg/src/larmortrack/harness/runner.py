from __future__ import annotations

import time
from typing import TYPE_CHECKING

from larmortrack.control.adaptive import (
    SensingTimeState,
    choose_phase,
    choose_sensing_time,
    figure_of_merit,
)
from larmortrack.control.schedule import sensing_exponents
from larmortrack.core.errors import SignalExhaustedError
from larmortrack.core.logging_mixin import get_logger
from larmortrack.filters.base import FilterKind
from larmortrack.filters.gaussian import GaussianFilter
from larmortrack.filters.grid import GridFilter
from larmortrack.harness.record import MeasurementRow, RunRecord
from larmortrack.ramsey.settings import RamseySettings
from larmortrack.simulation.clock import ExperimentClock
from larmortrack.simulation.measurement import sample_measurement
from larmortrack.simulation.seeding import outcome_generator
from larmortrack.simulation.signal import generate_ground_truth, true_frequency_at

if TYPE_CHECKING:
    from larmortrack.config.run_config import RunConfig
    from larmortrack.filters.base import TrackingFilter
    from larmortrack.simulation.signal import GroundTruthSignal

_logger = get_logger("harness.runner")


def build_filter(cfg: RunConfig) -> TrackingFilter:
    if cfg.filter_kind is FilterKind.GRID:
        return GridFilter(cfg.freq_range, cfg.kappa, cfg.resolved_grid_points)
    return GaussianFilter(cfg.freq_range, cfg.kappa, cfg.reduction)


def make_signal(cfg: RunConfig) -> GroundTruthSignal:
    """Ground truth for ``cfg.seed``, sampled every ``tau_min`` over the run's span."""
    return generate_ground_truth(
        cfg.f0,
        cfg.kappa,
        cfg.tau_min,
        cfg.signal_duration,
        cfg.freq_range,
        cfg.seed,
    )


def run_tracking(cfg: RunConfig, signal: GroundTruthSignal | None = None) -> RunRecord:
    """Run the fixed sensing schedule, then adaptive tracking, until the budget is spent.

    Per measurement the order is: sample the outcome, update, record the
    estimate, predict over ``tau + t_oh``, then pick ``tau`` and ``theta`` for
    the next measurement. Only update and predict-plus-choice are timed;
    fallbacks taken by an update are logged between the two timed segments.
    A signal that runs out before the budget yields a truncated record.
    """
    if signal is None:
        signal = make_signal(cfg)
    tracker = build_filter(cfg)
    controller = cfg.controller
    rng = outcome_generator(cfg.seed)
    clock = ExperimentClock(cfg.t_oh)

    schedule = [k for k, repetitions in sensing_exponents(controller) for _ in range(repetitions)]
    n_sensing = len(schedule)
    state = tracker.initial_state()
    k = schedule[0]
    theta = choose_phase(tracker.posterior(state), 2**k, controller.tau_min)

    rows: list[MeasurementRow] = []
    truncated = False
    _logger.info(
        "Starting %s run seed=%d (%d sensing measurements, budget %s)",
        tracker.kind,
        cfg.seed,
        n_sensing,
        f"{cfg.measurement_budget} measurements" if cfg.measurement_budget else f"{cfg.total_time} s",
    )

    while _budget_left(cfg, clock, len(rows)):
        started_at = clock.t
        try:
            truth = true_frequency_at(signal, started_at)
        except SignalExhaustedError:
            _logger.warning("Signal exhausted at t=%.6g s after %d measurements", started_at, len(rows))
            truncated = True
            break

        tau = controller.tau_for(k)
        settings = RamseySettings(theta=theta, tau=tau, t2_star=cfg.t2_star)
        outcome = sample_measurement(truth, settings, rng)
        delta_t = clock.advance(tau)

        tick = time.perf_counter_ns()
        state = tracker.update(state, outcome, settings)
        update_ns = time.perf_counter_ns() - tick

        tracker.report_fallbacks(state, outcome, settings)
        estimate = tracker.estimate(state)
        n_params = tracker.parameter_count(state)

        tick = time.perf_counter_ns()
        state = tracker.predict(state, delta_t)
        index = len(rows) + 1
        if index < n_sensing:
            k = schedule[index]
        else:
            fom = figure_of_merit(tracker.posterior(state), tau)
            k = choose_sensing_time(SensingTimeState(k), fom, controller).k
        theta = choose_phase(tracker.posterior(state), 2**k, controller.tau_min)
        choose_ns = time.perf_counter_ns() - tick

        rows.append(
            MeasurementRow(
                idx=len(rows),
                time_s=started_at,
                tau_s=tau,
                theta_rad=settings.theta,
                outcome=outcome,
                estimate_hz=estimate,
                truth_hz=truth,
                n_params=n_params,
                compute_ns=update_ns + choose_ns,
            )
        )

    record = RunRecord(
        seed=cfg.seed,
        filter_kind=tracker.kind,
        rows=tuple(rows),
        n_sensing=min(n_sensing, len(rows)),
        overhead_s=cfg.t_oh,
        fail_threshold=cfg.fail_threshold,
        timing_warmup=cfg.timing_warmup,
        mse_window=cfg.mse_window,
        truncated=truncated,
        config=cfg.to_dict(),
        config_hash=cfg.config_hash(),
    )
    if rows:
        summary = record.summary()
        _logger.info(
            "Finished %s run seed=%d: %d measurements, mse=%.4g MHz^2, mean params %.1f",
            tracker.kind,
            cfg.seed,
            summary.n_meas,
            summary.mse,
            summary.mean_params,
        )
    return record


def _budget_left(cfg: RunConfig, clock: ExperimentClock, done: int) -> bool:
    if cfg.measurement_budget is not None:
        return done < cfg.measurement_budget
    assert cfg.total_time is not None
    return clock.t < cfg.total_time
