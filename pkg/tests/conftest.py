from __future__ import annotations

import pytest

from larmortrack.config.run_config import RunConfig
from larmortrack.control.schedule import ControllerConfig
from larmortrack.ramsey.settings import FrequencyRange

TAU_MIN = 20e-9


@pytest.fixture()
def freq_range() -> FrequencyRange:
    """The default prior range for a 20 ns shortest sensing time, [0, 50 MHz)."""
    return FrequencyRange.for_tau_min(TAU_MIN)


@pytest.fixture()
def small_config() -> RunConfig:
    """A short run on a coarse schedule, quick enough for either filter."""
    return RunConfig(
        controller=ControllerConfig(tau_min=TAU_MIN, n_sensing_times=6),
        total_time=None,
        measurement_budget=150,
        timing_warmup=10,
        f0=21.3e6,
        seed=7,
    )
