"""Ramsey outcome likelihood, exact and as a Gaussian comb.

The rotation angle enters as ``cos(2π τ f - θ)`` so that the fringe maxima
for outcome ``μ`` sit at ``f = (l + μ/2 + θ/2π) / τ``. The comb places one
unit-height Gaussian of width ``1 / (√2 π τ)`` on each of those maxima; near
a maximum ``(1 + cos x) / 2 = cos²(x/2) ≈ exp(-x²/4)``.
"""

from __future__ import annotations

import math
from typing import TYPE_CHECKING

import numpy as np

from larmortrack.mixture.component import GaussianComponent
from larmortrack.mixture.mixture import GaussianMixture
from larmortrack.ramsey.settings import TWO_PI

if TYPE_CHECKING:
    from numpy.typing import NDArray

    from larmortrack.ramsey.settings import FrequencyRange, RamseySettings

# Pairs further apart than this many summed sigmas contribute below exp(-8).
WINDOW_SIGMAS = 4.0

_SNAP = 1e-9


def likelihood_exact(settings: RamseySettings, f: float) -> float:
    """Probability of ``settings.outcome`` at true frequency ``f`` (dephasing included)."""
    p_zero = 0.5 * (1.0 + settings.contrast * math.cos(TWO_PI * settings.tau * f - settings.theta))
    return p_zero if settings.outcome == 0 else 1.0 - p_zero


def likelihood_exact_array(settings: RamseySettings, f: NDArray[np.float64]) -> NDArray[np.float64]:
    """Vectorised :func:`likelihood_exact` over an array of frequencies."""
    p_zero = 0.5 * (1.0 + settings.contrast * np.cos(TWO_PI * settings.tau * f - settings.theta))
    return p_zero if settings.outcome == 0 else 1.0 - p_zero


def comb_sigma(tau: float) -> float:
    return 1.0 / (math.sqrt(2.0) * math.pi * tau)


def comb_offset(settings: RamseySettings) -> float:
    """Fractional position of peak ``l = 0`` in units of the period ``1/τ``."""
    return 0.5 * settings.outcome + settings.theta / TWO_PI


def peak_centre(settings: RamseySettings, index: int) -> float:
    return (index + comb_offset(settings)) / settings.tau


def comb_indices(settings: RamseySettings, freq_range: FrequencyRange) -> range:
    """Peak indices whose centres fall in the range padded by half a period.

    The padded interval is half-open, so a range holding ``k`` whole periods
    always yields ``k + 1`` peaks.
    """
    offset = comb_offset(settings)
    first = _snapped_ceil(freq_range.lo * settings.tau - 0.5 - offset)
    stop = _snapped_ceil(freq_range.hi * settings.tau + 0.5 - offset)
    return range(first, max(first, stop))


def likelihood_comb(settings: RamseySettings, freq_range: FrequencyRange) -> GaussianMixture:
    sigma = comb_sigma(settings.tau)
    return GaussianMixture.of(
        GaussianComponent(1.0, peak_centre(settings, index), sigma)
        for index in comb_indices(settings, freq_range)
    )


def window_indices(
    settings: RamseySettings,
    prior: GaussianComponent,
    freq_range: FrequencyRange,
) -> range:
    """Comb peaks within ``4 (σ_a + σ_b)`` of one prior component."""
    reach = WINDOW_SIGMAS * (comb_sigma(settings.tau) + prior.sigma)
    offset = comb_offset(settings)
    full = comb_indices(settings, freq_range)
    first = max(full.start, math.ceil((prior.centre - reach) * settings.tau - offset))
    last = min(full.stop - 1, math.floor((prior.centre + reach) * settings.tau - offset))
    return range(first, max(first, last + 1))


def windowed_comb(
    settings: RamseySettings,
    prior: GaussianMixture,
    freq_range: FrequencyRange,
) -> GaussianMixture:
    """The comb restricted to peaks some prior component can reach.

    The result is empty when no component reaches any peak; callers then
    fall back to :func:`likelihood_comb`.
    """
    indices: set[int] = set()
    for component in prior:
        indices.update(window_indices(settings, component, freq_range))
    sigma = comb_sigma(settings.tau)
    return GaussianMixture.of(
        GaussianComponent(1.0, peak_centre(settings, index), sigma) for index in sorted(indices)
    )


def _snapped_ceil(value: float) -> int:
    nearest = round(value)
    if abs(value - nearest) < _SNAP:
        return int(nearest)
    return math.ceil(value)
