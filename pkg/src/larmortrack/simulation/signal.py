"""Ground-truth Larmor frequency trajectories.

The field performs a Wiener walk with diffusion ``kappa`` (Hz per square-root
second), sampled every ``step`` seconds and reflected at the edges of the
frequency range. The reflected walk is produced by folding the free walk
into the range, which equals step-by-step reflection as long as a single
increment is smaller than the range width.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from larmortrack.core.errors import SignalExhaustedError
from larmortrack.core.logging_mixin import get_logger
from larmortrack.simulation.seeding import run_streams

if TYPE_CHECKING:
    from numpy.typing import NDArray

    from larmortrack.ramsey.settings import FrequencyRange

_logger = get_logger("simulation.signal")

INTERIOR_FRACTION = 0.8
_TIME_SNAP = 1e-9


@dataclass(frozen=True, eq=False)
class GroundTruthSignal:
    """Piecewise-constant trajectory; ``values[i]`` holds on ``[i step, (i + 1) step)``."""

    f0: float
    kappa: float | None
    step: float
    values: NDArray[np.float64]
    seed: int | None = None

    def __post_init__(self) -> None:
        if not self.step > 0.0:
            raise ValueError(f"step must be positive, got {self.step!r}")
        values = np.array(self.values, dtype=np.float64)
        if values.ndim != 1 or values.size == 0:
            raise ValueError("A signal needs at least one sample.")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @property
    def total_time(self) -> float:
        return (self.values.size - 1) * self.step

    def __len__(self) -> int:
        return int(self.values.size)


def steps_for(total_time: float, step: float) -> int:
    """Number of increments needed so the last sample sits at or after ``total_time``."""
    ratio = total_time / step
    nearest = round(ratio)
    if abs(ratio - nearest) < _TIME_SNAP:
        return int(nearest)
    return math.ceil(ratio)


def draw_initial_frequency(freq_range: FrequencyRange, rng: np.random.Generator) -> float:
    """Uniform draw from the central part of the range."""
    margin = 0.5 * (1.0 - INTERIOR_FRACTION) * freq_range.width
    return float(rng.uniform(freq_range.lo + margin, freq_range.hi - margin))


def generate_ground_truth(
    f0: float | None,
    kappa: float,
    step: float,
    total_time: float,
    freq_range: FrequencyRange,
    seed: int,
) -> GroundTruthSignal:
    """Sample a reflected Wiener trajectory covering ``[0, total_time]``.

    ``f0=None`` draws the start frequency from the central 80% of the range
    with the same generator, before any increment.
    """
    if not step > 0.0:
        raise ValueError(f"step must be positive, got {step!r}")
    if not total_time > 0.0:
        raise ValueError(f"total_time must be positive, got {total_time!r}")
    if kappa < 0.0:
        raise ValueError(f"kappa must be non-negative, got {kappa!r}")

    rng = np.random.default_rng(run_streams(seed)[0])
    if f0 is None:
        f0 = draw_initial_frequency(freq_range, rng)
    elif not freq_range.lo <= f0 <= freq_range.hi:
        raise ValueError(f"f0={f0!r} lies outside [{freq_range.lo!r}, {freq_range.hi!r}]")

    n_steps = steps_for(total_time, step)
    if kappa == 0.0:
        values = np.full(n_steps + 1, f0)
    else:
        increments = kappa * math.sqrt(step) * rng.standard_normal(n_steps)
        free = f0 + np.concatenate(([0.0], np.cumsum(increments)))
        values = _fold(free, freq_range.lo, freq_range.hi)
        values[0] = f0

    _logger.debug("Generated %d-sample signal from f0=%.6g Hz (seed=%d)", values.size, f0, seed)
    return GroundTruthSignal(f0=f0, kappa=kappa, step=step, values=values, seed=seed)


def true_frequency_at(signal: GroundTruthSignal, t: float) -> float:
    if t < 0.0:
        raise SignalExhaustedError(f"Time {t!r} s precedes the start of the signal.")
    ratio = t / signal.step
    nearest = round(ratio)
    index = int(nearest) if abs(ratio - nearest) < _TIME_SNAP else math.floor(ratio)
    if index >= len(signal):
        raise SignalExhaustedError(
            f"Time {t!r} s is past the end of the signal ({signal.total_time!r} s)."
        )
    return float(signal.values[index])


def _fold(values: NDArray[np.float64], lo: float, hi: float) -> NDArray[np.float64]:
    width = hi - lo
    offset = np.mod(values - lo, 2.0 * width)
    return lo + np.where(offset > width, 2.0 * width - offset, offset)
