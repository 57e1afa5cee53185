from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

from larmortrack.core.errors import DegenerateMixtureError
from larmortrack.mixture.component import SQRT_TWO_PI, GaussianComponent

if TYPE_CHECKING:
    from collections.abc import Iterable, Iterator


@dataclass(frozen=True)
class GaussianMixture:
    """Ordered, immutable collection of Gaussian components.

    ``generation`` counts the measurement updates folded into the mixture so
    far. It is carried along for diagnostics and takes no part in the maths.
    """

    components: tuple[GaussianComponent, ...] = ()
    generation: int = 0

    @classmethod
    def of(cls, components: Iterable[GaussianComponent], generation: int = 0) -> GaussianMixture:
        return cls(tuple(components), generation)

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self) -> Iterator[GaussianComponent]:
        return iter(self.components)

    @property
    def is_empty(self) -> bool:
        return not self.components

    @property
    def max_amplitude(self) -> float:
        return max((c.amplitude for c in self.components), default=0.0)

    def parameter_count(self) -> int:
        return 3 * len(self.components)

    def with_components(self, components: Iterable[GaussianComponent]) -> GaussianMixture:
        return GaussianMixture(tuple(components), self.generation)

    def normalized(self) -> GaussianMixture:
        """Same shape with the tallest component at amplitude 1."""
        peak = self.max_amplitude
        if peak <= 0.0 or peak == 1.0:
            return self
        return self.with_components(c.scaled(1.0 / peak) for c in self.components)

    def moments(self) -> tuple[float, float]:
        return mixture_moments(self)

    def fourier_coefficient(self, omega: float) -> complex:
        return fourier_coefficient(self, omega)

    def evaluate(self, f: float) -> float:
        return evaluate(self, f)


def mixture_moments(mixture: GaussianMixture) -> tuple[float, float]:
    """Mean and variance of the mixture read as a density.

    Raises :class:`DegenerateMixtureError` when the mixture has no mass.
    """
    weights = [c.amplitude * c.sigma for c in mixture.components]
    total = math.fsum(weights)
    if total <= 0.0:
        raise DegenerateMixtureError("Mixture has zero total mass; moments are undefined.")
    mean = math.fsum(w * c.centre for w, c in zip(weights, mixture.components, strict=True)) / total
    variance = (
        math.fsum(
            w * (c.variance + (c.centre - mean) ** 2)
            for w, c in zip(weights, mixture.components, strict=True)
        )
        / total
    )
    return mean, max(variance, 0.0)


def fourier_coefficient(mixture: GaussianMixture, omega: float) -> complex:
    """Unnormalised characteristic function ``∫ p(f) exp(i omega f) df``."""
    total = 0j
    for c in mixture.components:
        decay = -0.5 * (omega * c.sigma) ** 2
        total += SQRT_TWO_PI * c.amplitude * c.sigma * cmath.exp(complex(decay, omega * c.centre))
    return total


def evaluate(mixture: GaussianMixture, f: float) -> float:
    return math.fsum(c.evaluate(f) for c in mixture.components)
