from __future__ import annotations

import numpy as np
import pytest

from larmortrack.core.errors import SignalExhaustedError
from larmortrack.ramsey.settings import FrequencyRange
from larmortrack.simulation.signal import (
    GroundTruthSignal,
    draw_initial_frequency,
    generate_ground_truth,
    steps_for,
    true_frequency_at,
)


class TestGenerateGroundTruth:
    def test_zero_kappa_is_constant(self, freq_range):
        signal = generate_ground_truth(21.3e6, 0.0, 1e-6, 1e-3, freq_range, seed=1)
        assert len(signal) == 1001
        assert np.all(signal.values == 21.3e6)

    def test_increment_variance(self, freq_range):
        kappa, step = 1e3, 1e-6
        signal = generate_ground_truth(25e6, kappa, step, 1e5 * step, freq_range, seed=11)
        increments = np.diff(signal.values)
        assert increments.size == 100_000
        assert increments.var() == pytest.approx(kappa**2 * step, rel=0.03)
        assert abs(increments.mean()) < 0.02

    def test_same_seed_same_trajectory(self, freq_range):
        a = generate_ground_truth(None, 5e6, 1e-6, 1e-3, freq_range, seed=42)
        b = generate_ground_truth(None, 5e6, 1e-6, 1e-3, freq_range, seed=42)
        assert a.f0 == b.f0
        np.testing.assert_array_equal(a.values, b.values)

    def test_different_seed_different_trajectory(self, freq_range):
        a = generate_ground_truth(25e6, 5e6, 1e-6, 1e-3, freq_range, seed=1)
        b = generate_ground_truth(25e6, 5e6, 1e-6, 1e-3, freq_range, seed=2)
        assert not np.array_equal(a.values, b.values)

    def test_reflects_into_range(self):
        narrow = FrequencyRange(0.0, 1000.0)
        signal = generate_ground_truth(990.0, 100.0, 1.0, 5000.0, narrow, seed=3)
        assert signal.values.min() >= 0.0
        assert signal.values.max() <= 1000.0

    def test_starts_at_f0(self, freq_range):
        signal = generate_ground_truth(10e6, 20e6, 1e-6, 1e-4, freq_range, seed=5)
        assert signal.values[0] == 10e6
        assert signal.seed == 5
        assert signal.kappa == 20e6

    def test_random_start_in_interior(self, freq_range):
        for seed in range(20):
            f0 = generate_ground_truth(None, 1e6, 1e-6, 1e-5, freq_range, seed=seed).f0
            assert 5e6 <= f0 <= 45e6

    @pytest.mark.parametrize(
        ("kwargs", "match"),
        [
            ({"step": 0.0}, "step"),
            ({"total_time": 0.0}, "total_time"),
            ({"kappa": -1.0}, "kappa"),
            ({"f0": 60e6}, "outside"),
        ],
    )
    def test_invalid(self, freq_range, kwargs, match):
        args = {"f0": 1e6, "kappa": 1e6, "step": 1e-6, "total_time": 1e-3, "seed": 0}
        args.update(kwargs)
        with pytest.raises(ValueError, match=match):
            generate_ground_truth(freq_range=freq_range, **args)


class TestTrueFrequencyAt:
    @pytest.fixture()
    def signal(self) -> GroundTruthSignal:
        return GroundTruthSignal(f0=1.0, kappa=None, step=0.1, values=np.array([1.0, 2.0, 3.0, 4.0]))

    def test_start(self, signal):
        assert true_frequency_at(signal, 0.0) == 1.0

    def test_floor_rule(self, signal):
        assert true_frequency_at(signal, 0.15) == 2.0

    def test_end_is_included(self, signal):
        assert true_frequency_at(signal, signal.total_time) == 4.0

    def test_accumulated_rounding_snaps(self, signal):
        assert true_frequency_at(signal, 0.1 + 0.1 + 0.1) == 4.0

    def test_past_the_end(self, signal):
        with pytest.raises(SignalExhaustedError, match="past the end"):
            true_frequency_at(signal, 0.45)

    def test_before_the_start(self, signal):
        with pytest.raises(SignalExhaustedError):
            true_frequency_at(signal, -0.01)


class TestGroundTruthSignal:
    def test_values_are_read_only(self):
        signal = GroundTruthSignal(0.0, None, 1.0, np.zeros(3))
        with pytest.raises(ValueError):
            signal.values[0] = 1.0

    def test_total_time(self):
        assert GroundTruthSignal(0.0, None, 0.5, np.zeros(5)).total_time == 2.0

    @pytest.mark.parametrize(("step", "values"), [(0.0, np.zeros(2)), (1.0, np.zeros(0))])
    def test_invalid(self, step, values):
        with pytest.raises(ValueError):
            GroundTruthSignal(0.0, None, step, values)


class TestHelpers:
    @pytest.mark.parametrize(("total", "step", "expected"), [(1.0, 0.1, 10), (1.05, 0.1, 11), (0.3, 0.1, 3)])
    def test_steps_for(self, total, step, expected):
        assert steps_for(total, step) == expected

    def test_draw_initial_frequency(self, freq_range):
        rng = np.random.default_rng(0)
        draws = [draw_initial_frequency(freq_range, rng) for _ in range(500)]
        assert min(draws) >= 5e6
        assert max(draws) <= 45e6
