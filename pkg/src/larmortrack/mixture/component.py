"""Single weighted Gaussian and the closed-form algebra on pairs of them.

A component ``(amplitude, centre, sigma)`` stands for the unnormalised
density ``amplitude * exp(-(f - centre)**2 / (2 * sigma**2))``. All operations
return new components; nothing here mutates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

SQRT_TWO_PI = math.sqrt(2.0 * math.pi)

# exp() of anything below this underflows to a subnormal or zero.
_UNDERFLOW_EXPONENT = -700.0


@dataclass(frozen=True, slots=True)
class GaussianComponent:
    """One term of a Gaussian mixture, frequencies in Hz."""

    amplitude: float
    centre: float
    sigma: float

    def __post_init__(self) -> None:
        if not (self.sigma > 0.0 and math.isfinite(self.sigma)):
            raise ValueError(f"sigma must be positive and finite, got {self.sigma!r}")
        if not (self.amplitude >= 0.0 and math.isfinite(self.amplitude)):
            raise ValueError(f"amplitude must be non-negative and finite, got {self.amplitude!r}")
        if not math.isfinite(self.centre):
            raise ValueError(f"centre must be finite, got {self.centre!r}")

    @property
    def variance(self) -> float:
        return self.sigma * self.sigma

    @property
    def mass(self) -> float:
        """Integral of the component over the real line."""
        return SQRT_TWO_PI * self.amplitude * self.sigma

    def evaluate(self, f: float) -> float:
        z = (f - self.centre) / self.sigma
        return self.amplitude * math.exp(-0.5 * z * z)

    def scaled(self, factor: float) -> GaussianComponent:
        return GaussianComponent(self.amplitude * factor, self.centre, self.sigma)


def product(a: GaussianComponent, b: GaussianComponent) -> GaussianComponent:
    """Pointwise product of two components, itself a component.

    The amplitude uses the difference-of-centres form of the exponent, which
    is algebraically equal to the expanded quadratic but keeps full precision
    when the centres are large compared with their separation. Amplitudes
    whose exponent would underflow become exactly zero.
    """
    var_a = a.variance
    var_b = b.variance
    total = var_a + var_b
    sigma = math.sqrt(var_a * var_b / total)
    centre = (a.centre * var_b + b.centre * var_a) / total
    delta = a.centre - b.centre
    exponent = -(delta * delta) / (2.0 * total)
    if exponent < _UNDERFLOW_EXPONENT:
        amplitude = 0.0
    else:
        amplitude = a.amplitude * b.amplitude * math.exp(exponent)
    return GaussianComponent(amplitude, centre, sigma)


def convolve_random_walk(component: GaussianComponent, variance_increment: float) -> GaussianComponent:
    """Convolve with a zero-mean Gaussian kernel of the given variance.

    The kernel is normalised, so the component's mass is preserved.
    """
    if variance_increment < 0.0:
        raise ValueError(f"variance_increment must be non-negative, got {variance_increment!r}")
    if variance_increment == 0.0:
        return component
    sigma = math.sqrt(component.variance + variance_increment)
    return GaussianComponent(component.amplitude * component.sigma / sigma, component.centre, sigma)


def kl_divergence(first: GaussianComponent, second: GaussianComponent) -> float:
    """Kullback-Leibler divergence KL(first || second) of the normalised shapes."""
    delta = first.centre - second.centre
    value = (
        math.log(second.sigma / first.sigma)
        + (first.variance + delta * delta) / (2.0 * second.variance)
        - 0.5
    )
    return max(value, 0.0)


def symmetric_kl(first: GaussianComponent, second: GaussianComponent) -> float:
    """Smaller of the two directed divergences; the merge criterion."""
    return min(kl_divergence(first, second), kl_divergence(second, first))


def merge_pair(first: GaussianComponent, second: GaussianComponent) -> GaussianComponent:
    """Collapse two similar components into one.

    Centre and variance are plain averages and the amplitudes add, so an
    identical pair merges into the same shape with twice the height.
    """
    centre = 0.5 * (first.centre + second.centre)
    variance = 0.5 * (first.variance + second.variance)
    return GaussianComponent(first.amplitude + second.amplitude, centre, math.sqrt(variance))
