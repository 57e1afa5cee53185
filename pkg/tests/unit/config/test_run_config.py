from __future__ import annotations

import math

import pytest

from larmortrack.config.run_config import RunConfig
from larmortrack.control.schedule import ControllerConfig
from larmortrack.core.errors import ConfigError


class TestRunConfig:
    def test_defaults(self):
        cfg = RunConfig()
        assert cfg.total_time == 5e-3
        assert cfg.measurement_budget is None
        assert cfg.freq_range.hi == pytest.approx(50e6)
        assert cfg.resolved_grid_points == 10 * 2**10

    @pytest.mark.parametrize(
        ("total_time", "budget"),
        [(None, None), (1e-3, 100)],
    )
    def test_exactly_one_budget(self, total_time, budget):
        with pytest.raises(ConfigError, match="Exactly one"):
            RunConfig(total_time=total_time, measurement_budget=budget)

    def test_explicit_grid_points(self):
        assert RunConfig(grid_points=500).resolved_grid_points == 500

    def test_signal_duration_for_measurement_budget(self):
        cfg = RunConfig(
            controller=ControllerConfig(tau_min=20e-9, n_sensing_times=3),
            total_time=None,
            measurement_budget=10,
            t_oh=1e-6,
        )
        assert cfg.signal_duration == pytest.approx(10 * (80e-9 + 1e-6))

    def test_signal_duration_for_time_budget(self):
        assert RunConfig(total_time=2e-3).signal_duration == 2e-3

    def test_hash_ignores_seed(self):
        assert RunConfig(seed=1).config_hash() == RunConfig(seed=2).config_hash()
        assert RunConfig(kappa=1e6).config_hash() != RunConfig(kappa=2e6).config_hash()

    def test_to_dict_maps_infinite_coherence_to_none(self):
        payload = RunConfig(t2_star=math.inf).to_dict()
        assert payload["t2star_s"] is None
        assert payload["filter"] == "gaussian"

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"t_oh": -1.0},
            {"t2_star": 0.0},
            {"kappa": math.inf},
            {"grid_points": 1},
            {"timing_warmup": -1},
            {"fail_threshold": -0.1},
            {"f0": -5.0},
        ],
    )
    def test_invalid(self, kwargs):
        with pytest.raises(ConfigError):
            RunConfig(**kwargs)
