from __future__ import annotations

import math

import pytest

from larmortrack.ramsey.settings import TWO_PI, FrequencyRange, RamseySettings


class TestFrequencyRange:
    def test_for_tau_min(self):
        r = FrequencyRange.for_tau_min(20e-9)
        assert r.lo == 0.0
        assert r.hi == pytest.approx(50e6)
        assert r.width == pytest.approx(50e6)
        assert r.midpoint == pytest.approx(25e6)

    def test_for_tau_min_with_offset(self):
        r = FrequencyRange.for_tau_min(1e-6, lo=2e6)
        assert (r.lo, r.hi) == (2e6, 3e6)

    def test_half_open(self):
        r = FrequencyRange(0.0, 10.0)
        assert r.contains(0.0)
        assert not r.contains(10.0)

    @pytest.mark.parametrize(
        ("f", "expected"), [(5.0, 5.0), (12.0, 8.0), (-3.0, 3.0), (25.0, 5.0), (10.0, 10.0)]
    )
    def test_fold(self, f, expected):
        assert FrequencyRange(0.0, 10.0).fold(f) == pytest.approx(expected)

    @pytest.mark.parametrize(("lo", "hi"), [(1.0, 1.0), (2.0, 1.0), (0.0, math.inf)])
    def test_invalid(self, lo, hi):
        with pytest.raises(ValueError, match="lo < hi"):
            FrequencyRange(lo, hi)

    def test_nonpositive_tau_min(self):
        with pytest.raises(ValueError, match="tau_min"):
            FrequencyRange.for_tau_min(0.0)


class TestRamseySettings:
    def test_theta_normalised(self):
        assert RamseySettings(theta=-math.pi / 2, tau=1e-6).theta == pytest.approx(1.5 * math.pi)
        assert RamseySettings(theta=5 * math.pi, tau=1e-6).theta == pytest.approx(math.pi)

    def test_theta_stays_below_two_pi(self):
        theta = RamseySettings(theta=-1e-20, tau=1e-6).theta
        assert 0.0 <= theta < TWO_PI

    def test_contrast(self):
        assert RamseySettings(0.0, 1e-6).contrast == 1.0
        assert RamseySettings(0.0, 1e-6, t2_star=1e-6).contrast == pytest.approx(math.exp(-1.0))

    def test_with_outcome(self):
        s = RamseySettings(0.3, 1e-6).with_outcome(1)
        assert s.outcome == 1
        assert s.theta == 0.3

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"theta": math.nan, "tau": 1e-6},
            {"theta": 0.0, "tau": 0.0},
            {"theta": 0.0, "tau": 1e-6, "t2_star": 0.0},
            {"theta": 0.0, "tau": 1e-6, "outcome": 2},
        ],
    )
    def test_invalid(self, kwargs):
        with pytest.raises(ValueError, match="must be"):
            RamseySettings(**kwargs)
