from __future__ import annotations

import dataclasses
import math

import pytest

from larmortrack.core.errors import ConfigError
from larmortrack.filters.base import FilterKind
from larmortrack.harness.compare import BASELINE_NOTE, SPEEDUP_FORMULA, check_shared, direct_compare


@pytest.fixture()
def short_config(small_config):
    return small_config.replace(measurement_budget=70, f0=None)


class TestCheckShared:
    def test_accepts_matching_pair(self, short_config):
        check_shared(short_config, short_config.replace(filter_kind=FilterKind.GRID, seed=99))

    @pytest.mark.parametrize(
        ("changes", "name"),
        [
            ({"kappa": 1.0}, "kappa"),
            ({"t_oh": 2e-6}, "t_oh"),
            ({"measurement_budget": 10}, "measurement_budget"),
        ],
    )
    def test_mismatch(self, short_config, changes, name):
        with pytest.raises(ConfigError, match=name):
            check_shared(short_config, short_config.replace(**changes))

    def test_tau_min_mismatch(self, short_config):
        controller = dataclasses.replace(short_config.controller, tau_min=10e-9)
        with pytest.raises(ConfigError, match="tau_min"):
            check_shared(short_config, short_config.replace(controller=controller))


class TestDirectCompare:
    def test_self_comparison(self, short_config):
        row = direct_compare((short_config, short_config), 1)
        assert row.baseline_fail_rate == row.candidate_fail_rate
        assert row.baseline_mean_mse == row.candidate_mean_mse
        assert row.baseline_mean_params == row.candidate_mean_params
        assert row.speed_increase > 0.0

    def test_both_filters_replay_the_same_signal(self, short_config):
        pair = (short_config.replace(filter_kind=FilterKind.GRID), short_config)
        row = direct_compare(pair, 2, seeds=[3, 4])
        assert len(row.records) == 4
        grid_first, _, gaussian_first, _ = row.records
        assert grid_first.seed == gaussian_first.seed == 3
        # the sensing schedule is fixed, so both filters sample the truth at the same instants there
        n = grid_first.n_sensing
        assert [r.truth_hz for r in grid_first.rows[:n]] == [r.truth_hz for r in gaussian_first.rows[:n]]

    def test_row_contents(self, short_config):
        pair = (short_config.replace(filter_kind=FilterKind.GRID), short_config)
        row = direct_compare(pair, 2)
        assert (row.baseline, row.candidate) == (FilterKind.GRID, FilterKind.GAUSSIAN)
        assert row.n_runs == 2
        assert row.baseline_mean_params == 640.0
        assert 0.0 <= row.candidate_fail_rate <= 1.0
        assert tuple(r.seed for r in row.records) == (7, 8, 7, 8)
        assert row.to_row()["speed_increase"] == row.speed_increase

    def test_speed_increase_without_timing(self, short_config):
        row = dataclasses.replace(direct_compare((short_config, short_config), 1), candidate_compute_ns=0.0)
        assert math.isnan(row.speed_increase)

    def test_infinite_coherence_is_null_in_row(self, short_config):
        cfg = short_config.replace(t2_star=math.inf)
        assert direct_compare((cfg, cfg), 1).to_row()["t2star_s"] is None

    def test_seed_count_must_match(self, short_config):
        with pytest.raises(ConfigError, match="Expected 2 seeds"):
            direct_compare((short_config, short_config), 2, seeds=[1])

    def test_needs_a_run(self, short_config):
        with pytest.raises(ConfigError, match="n_runs"):
            direct_compare((short_config, short_config), 0)

    def test_notes(self):
        assert "scipy.ndimage" in BASELINE_NOTE
        assert SPEEDUP_FORMULA.startswith("speed_increase")
