from __future__ import annotations

import math

import pytest

from larmortrack.config.builder import CONFIG_KEYS, build_run_config, describe_keys
from larmortrack.config.run_config import MseWindow, RunConfig
from larmortrack.control.schedule import SensingOrder
from larmortrack.core.errors import ConfigError
from larmortrack.filters.base import FilterKind


class TestBuildRunConfig:
    def test_empty_gives_defaults(self):
        assert build_run_config({}) == RunConfig()

    def test_display_units_become_si(self):
        cfg = build_run_config(
            {
                "tau_min_ns": 20,
                "overhead_us": 10,
                "t2star_us": 100,
                "kappa_mhz": 10,
                "total_time_ms": 5,
                "f0_mhz": 21.3,
                "freq_lo_mhz": 1,
            }
        )
        assert cfg.tau_min == pytest.approx(20e-9)
        assert cfg.t_oh == pytest.approx(10e-6)
        assert cfg.t2_star == pytest.approx(100e-6)
        assert cfg.kappa == pytest.approx(10e6)
        assert cfg.total_time == pytest.approx(5e-3)
        assert cfg.f0 == pytest.approx(21.3e6)
        assert cfg.freq_lo == pytest.approx(1e6)

    @pytest.mark.parametrize("raw", ["inf", float("inf")])
    def test_infinite_coherence(self, raw):
        assert math.isinf(build_run_config({"t2star_us": raw}).t2_star)

    def test_measurement_budget_replaces_time(self):
        cfg = build_run_config({"measurements": 1000})
        assert cfg.measurement_budget == 1000
        assert cfg.total_time is None

    def test_time_budget_replaces_measurements(self):
        base = build_run_config({"measurements": 1000})
        cfg = build_run_config({"total_time_ms": 2}, base=base)
        assert cfg.measurement_budget is None
        assert cfg.total_time == pytest.approx(2e-3)

    def test_both_budgets(self):
        with pytest.raises(ConfigError, match="either total_time_ms or measurements"):
            build_run_config({"measurements": 10, "total_time_ms": 1})

    def test_nested_sections(self):
        cfg = build_run_config(
            {
                "n_sensing_times": 6,
                "g": 4,
                "f": 0,
                "sensing_order": "Ascending",
                "amplitude_threshold": 0.1,
                "max_components": 8,
            }
        )
        assert cfg.controller.n_sensing_times == 6
        assert (cfg.controller.repetitions_base, cfg.controller.repetitions_step) == (4, 0)
        assert cfg.controller.sensing_order is SensingOrder.ASCENDING
        assert cfg.reduction.amplitude_threshold == 0.1
        assert cfg.reduction.max_components == 8

    def test_enums(self):
        cfg = build_run_config({"filter": "GRID", "mse_window": "all"})
        assert cfg.filter_kind is FilterKind.GRID
        assert cfg.mse_window is MseWindow.ALL

    def test_optional_none(self):
        cfg = build_run_config({"max_components": "none", "grid_points": None})
        assert cfg.reduction.max_components is None
        assert cfg.grid_points is None

    def test_base_is_kept(self):
        base = build_run_config({"kappa_mhz": 2, "filter": "grid"})
        cfg = build_run_config({"seed": 3}, base=base)
        assert cfg.kappa == pytest.approx(2e6)
        assert cfg.filter_kind is FilterKind.GRID
        assert cfg.seed == 3

    def test_unknown_keys(self):
        with pytest.raises(ConfigError, match="Unknown config key\\(s\\): bogus, zzz"):
            build_run_config({"zzz": 1, "bogus": 2, "seed": 1})

    @pytest.mark.parametrize(
        ("key", "raw"),
        [
            ("n_sensing_times", "many"),
            ("n_sensing_times", 2.5),
            ("seed", True),
            ("kappa_mhz", "fast"),
            ("filter", "particle"),
            ("sensing_order", "random"),
        ],
    )
    def test_invalid_values(self, key, raw):
        with pytest.raises(ConfigError, match=f"Invalid value for '{key}'"):
            build_run_config({key: raw})

    @pytest.mark.parametrize(
        "values",
        [{"g": 0}, {"n_sensing_times": 0}, {"kl_threshold": 0.0}, {"amplitude_threshold": 1.5}],
    )
    def test_section_validation_becomes_config_error(self, values):
        with pytest.raises(ConfigError):
            build_run_config(values)

    @pytest.mark.parametrize("values", [{"overhead_us": -1}, {"seed": -1}, {"f0_mhz": 80}])
    def test_run_validation(self, values):
        with pytest.raises(ConfigError):
            build_run_config(values)


class TestDescribeKeys:
    def test_every_key_described(self):
        described = dict(describe_keys())
        assert set(described) == {key.name for key in CONFIG_KEYS}
        assert described["seed"] == "run seed"
