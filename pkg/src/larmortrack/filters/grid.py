"""Exact Bayesian filtering on an equally spaced frequency grid.

This is the reference the Gaussian filter is measured against: the full
Ramsey likelihood with dephasing is applied bin by bin and the random-walk
prediction is a truncated Gaussian convolution with reflecting edges.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, replace
from typing import TYPE_CHECKING

import numpy as np
from scipy.ndimage import gaussian_filter1d

from larmortrack.filters.base import FilterKind, TrackingFilter, UpdateFallback
from larmortrack.ramsey.likelihood import likelihood_exact_array

if TYPE_CHECKING:
    from numpy.typing import NDArray

    from larmortrack.mixture.mixture import GaussianMixture
    from larmortrack.ramsey.settings import FrequencyRange, RamseySettings


KERNEL_TRUNCATE = 6.0
DEFAULT_POINTS_PER_PERIOD = 10


@dataclass(frozen=True, eq=False)
class GridDistribution:
    """Probability masses on ``M`` bins of ``[lo, hi)``, centres at ``lo + (i + ½) Δf``."""

    lo: float
    hi: float
    values: NDArray[np.float64]
    fallbacks: tuple[UpdateFallback, ...] = ()

    def __post_init__(self) -> None:
        if self.hi <= self.lo:
            raise ValueError(f"Grid needs lo < hi, got [{self.lo!r}, {self.hi!r})")
        values = np.array(self.values, dtype=np.float64)
        if values.ndim != 1 or values.size < 2:
            raise ValueError(f"Grid needs at least 2 bins, got shape {values.shape}")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @property
    def size(self) -> int:
        return int(self.values.size)

    @property
    def bin_width(self) -> float:
        return (self.hi - self.lo) / self.size

    @property
    def centres(self) -> NDArray[np.float64]:
        return bin_centres(self.lo, self.hi, self.size)

    def with_values(self, values: NDArray[np.float64]) -> GridDistribution:
        return GridDistribution(self.lo, self.hi, values)

    def moments(self) -> tuple[float, float]:
        centres = self.centres
        mean = float(self.values @ centres)
        variance = float(self.values @ (centres - mean) ** 2)
        return mean, variance

    def fourier_coefficient(self, omega: float) -> complex:
        if omega == 0.0:
            return complex(self.values.sum())
        return complex(self.values @ np.exp(1j * omega * self.centres))


@functools.lru_cache(maxsize=32)
def bin_centres(lo: float, hi: float, size: int) -> NDArray[np.float64]:
    width = (hi - lo) / size
    centres = lo + (np.arange(size, dtype=np.float64) + 0.5) * width
    centres.setflags(write=False)
    return centres


def default_grid_points(n_sensing_times: int, points_per_period: int = DEFAULT_POINTS_PER_PERIOD) -> int:
    """Bins needed to resolve the finest fringe ``points_per_period`` times."""
    return points_per_period * 2**n_sensing_times


def init_grid(freq_range: FrequencyRange, points: int) -> GridDistribution:
    if points < 2:
        raise ValueError(f"A grid needs at least 2 points, got {points}")
    return GridDistribution(freq_range.lo, freq_range.hi, np.full(points, 1.0 / points))


def discretize(mixture: GaussianMixture, freq_range: FrequencyRange, points: int) -> GridDistribution:
    """Sample a mixture on the grid and normalise it; used to seed matched priors."""
    centres = bin_centres(freq_range.lo, freq_range.hi, points)
    density = np.zeros(points)
    for c in mixture:
        density += c.amplitude * np.exp(-0.5 * ((centres - c.centre) / c.sigma) ** 2)
    total = density.sum()
    if total <= 0.0:
        raise ValueError("Mixture has no mass on the grid.")
    return GridDistribution(freq_range.lo, freq_range.hi, density / total)


def update_grid(dist: GridDistribution, outcome: int, settings: RamseySettings) -> GridDistribution:
    likelihood = likelihood_exact_array(settings.with_outcome(outcome), dist.centres)
    posterior = likelihood * dist.values
    total = posterior.sum()
    if not (total > 0.0 and math.isfinite(total)):
        return replace(dist, fallbacks=(UpdateFallback.NO_MASS,))
    return dist.with_values(posterior / total)


def predict_grid(dist: GridDistribution, kappa: float, delta_t: float) -> GridDistribution:
    if delta_t < 0.0:
        raise ValueError(f"delta_t must be non-negative, got {delta_t!r}")
    variance = kappa * kappa * delta_t
    if variance == 0.0:
        return dist
    sigma_bins = math.sqrt(variance) / dist.bin_width
    smoothed = gaussian_filter1d(dist.values, sigma_bins, mode="reflect", truncate=KERNEL_TRUNCATE)
    return dist.with_values(smoothed / smoothed.sum())


def estimate_grid(dist: GridDistribution) -> float:
    return float(dist.centres[int(np.argmax(dist.values))])


class GridFilter(TrackingFilter[GridDistribution]):
    kind = FilterKind.GRID

    def __init__(self, freq_range: FrequencyRange, kappa: float, points: int) -> None:
        super().__init__(freq_range, kappa)
        if points < 2:
            raise ValueError(f"A grid needs at least 2 points, got {points}")
        self.points = points

    def initial_state(self) -> GridDistribution:
        return init_grid(self.freq_range, self.points)

    def update(self, state: GridDistribution, outcome: int, settings: RamseySettings) -> GridDistribution:
        return update_grid(state, outcome, settings)

    def predict(self, state: GridDistribution, delta_t: float) -> GridDistribution:
        return predict_grid(state, self.kappa, delta_t)

    def estimate(self, state: GridDistribution) -> float:
        return estimate_grid(state)

    def parameter_count(self, state: GridDistribution) -> int:
        return state.size

    def posterior(self, state: GridDistribution) -> GridDistribution:
        return state

    def fallbacks(self, state: GridDistribution) -> tuple[UpdateFallback, ...]:
        return state.fallbacks
