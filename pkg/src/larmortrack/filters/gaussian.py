"""Approximate Bayesian filter whose posterior is a small Gaussian mixture.

Each measurement multiplies the prior by the Gaussian comb that approximates
the Ramsey likelihood, reduces the resulting mixture, and diffuses it with
the random-walk kernel. Before the first measurement the prior is uniform on
the frequency range and is kept symbolic.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field, replace
from typing import TYPE_CHECKING

from larmortrack.core.errors import UninitializedStateError
from larmortrack.filters.base import FilterKind, TrackingFilter, UpdateFallback
from larmortrack.mixture.component import GaussianComponent, convolve_random_walk, product
from larmortrack.mixture.mixture import GaussianMixture
from larmortrack.mixture.reduce import ReductionConfig, reduce
from larmortrack.ramsey.likelihood import (
    comb_sigma,
    likelihood_comb,
    peak_centre,
    window_indices,
)

if TYPE_CHECKING:
    from larmortrack.ramsey.settings import FrequencyRange, RamseySettings

_SQRT_TWO = math.sqrt(2.0)


@dataclass(frozen=True)
class GaussianFilterConfig:
    kappa: float = 10e6
    reduction: ReductionConfig = field(default_factory=ReductionConfig)

    def __post_init__(self) -> None:
        if not (self.kappa >= 0.0 and math.isfinite(self.kappa)):
            raise ValueError(f"kappa must be non-negative and finite, got {self.kappa!r}")


@dataclass(frozen=True)
class FilterState:
    posterior: GaussianMixture
    range: FrequencyRange
    uniform: bool
    config: GaussianFilterConfig
    fallbacks: tuple[UpdateFallback, ...] = ()

    def __post_init__(self) -> None:
        if self.uniform == (not self.posterior.is_empty):
            raise ValueError("FilterState must be either uniform or carry a nonempty posterior.")

    def fourier_coefficient(self, omega: float) -> complex:
        if not self.uniform:
            return self.posterior.fourier_coefficient(omega)
        if omega == 0.0:
            return complex(self.range.width)
        return (cmath.exp(1j * omega * self.range.hi) - cmath.exp(1j * omega * self.range.lo)) / (1j * omega)

    def moments(self) -> tuple[float, float]:
        if self.uniform:
            return self.range.midpoint, self.range.width**2 / 12.0
        return self.posterior.moments()


def init_uniform(freq_range: FrequencyRange, config: GaussianFilterConfig | None = None) -> FilterState:
    return FilterState(GaussianMixture(), freq_range, uniform=True, config=config or GaussianFilterConfig())


def update(state: FilterState, outcome: int, settings: RamseySettings) -> FilterState:
    """Fold one measurement outcome into the posterior.

    Recovery paths are recorded in ``fallbacks`` on the returned state
    rather than logged here.
    """
    settings = settings.with_outcome(outcome)
    generation = state.posterior.generation + 1
    fallbacks: list[UpdateFallback] = []
    if state.uniform:
        products = list(likelihood_comb(settings, state.range))
    else:
        prior = state.posterior.normalized()
        products = _windowed_products(prior, settings, state.range)
        if not products:
            fallbacks.append(UpdateFallback.FULL_COMB)
            comb = likelihood_comb(settings, state.range)
            products = [product(component, peak) for component in prior for peak in comb]

    reduction = state.config.reduction
    peak = max(c.amplitude for c in products)
    if peak == 0.0:
        fallbacks.append(UpdateFallback.NO_OVERLAP)
        products = [GaussianComponent(c.amplitude, c.centre, c.sigma * _SQRT_TWO) for c in state.posterior]
        posterior = GaussianMixture.of(products, generation)
    else:
        if peak < reduction.amplitude_threshold:
            fallbacks.append(UpdateFallback.LOST_TRACK)
        posterior = reduce(
            GaussianMixture.of(products, generation),
            reduction.amplitude_threshold,
            reduction.kl_threshold,
            reduction.max_components,
        )
    return replace(state, posterior=posterior, uniform=False, fallbacks=tuple(fallbacks))


def predict(state: FilterState, delta_t: float) -> FilterState:
    """Diffuse every component by the random walk accumulated over ``delta_t``."""
    if delta_t < 0.0:
        raise ValueError(f"delta_t must be non-negative, got {delta_t!r}")
    if state.uniform:
        return state
    increment = state.config.kappa**2 * delta_t
    if increment == 0.0:
        return state
    return replace(
        state,
        posterior=state.posterior.with_components(
            convolve_random_walk(c, increment) for c in state.posterior
        ),
    )


def estimate(state: FilterState) -> float:
    """Centre of the component carrying the most mass (lowest centre on ties)."""
    if state.uniform:
        raise UninitializedStateError("No estimate is available before the first measurement.")
    best = max(state.posterior, key=lambda c: (c.amplitude * c.sigma, -c.centre))
    return best.centre


def parameter_count(state: FilterState) -> int:
    return 0 if state.uniform else state.posterior.parameter_count()


def _windowed_products(
    prior: GaussianMixture,
    settings: RamseySettings,
    freq_range: FrequencyRange,
) -> list[GaussianComponent]:
    sigma = comb_sigma(settings.tau)
    products: list[GaussianComponent] = []
    for component in prior:
        for index in window_indices(settings, component, freq_range):
            peak = GaussianComponent(1.0, peak_centre(settings, index), sigma)
            products.append(product(component, peak))
    return products


class GaussianFilter(TrackingFilter[FilterState]):
    kind = FilterKind.GAUSSIAN

    def __init__(
        self,
        freq_range: FrequencyRange,
        kappa: float,
        reduction: ReductionConfig | None = None,
    ) -> None:
        super().__init__(freq_range, kappa)
        self.config = GaussianFilterConfig(kappa, reduction or ReductionConfig())

    def initial_state(self) -> FilterState:
        return init_uniform(self.freq_range, self.config)

    def update(self, state: FilterState, outcome: int, settings: RamseySettings) -> FilterState:
        return update(state, outcome, settings)

    def predict(self, state: FilterState, delta_t: float) -> FilterState:
        return predict(state, delta_t)

    def estimate(self, state: FilterState) -> float:
        return estimate(state)

    def parameter_count(self, state: FilterState) -> int:
        return parameter_count(state)

    def posterior(self, state: FilterState) -> FilterState:
        return state

    def fallbacks(self, state: FilterState) -> tuple[UpdateFallback, ...]:
        return state.fallbacks
