from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from enum import Enum
from typing import TYPE_CHECKING, Generic, Protocol, TypeVar, runtime_checkable

from larmortrack.core.logging_mixin import LoggingMixin

if TYPE_CHECKING:
    from larmortrack.ramsey.settings import FrequencyRange, RamseySettings


class FilterKind(Enum):
    GAUSSIAN = "gaussian"
    GRID = "grid"

    def __str__(self) -> str:
        return self.value


class UpdateFallback(Enum):
    """Recovery paths an update can take, recorded on the state it returns."""

    NO_OVERLAP = "measurement had no overlap with the prior; broadened the prior instead"
    FULL_COMB = "no comb peak within reach of the prior; used the full comb"
    LOST_TRACK = "every product fell below the amplitude threshold; broadened the posterior"
    NO_MASS = "grid update left no mass; kept the prior"

    @property
    def level(self) -> int:
        return logging.DEBUG if self is UpdateFallback.LOST_TRACK else logging.WARNING


@runtime_checkable
class SpectralPosterior(Protocol):
    """What the adaptive controllers need to know about a posterior."""

    def fourier_coefficient(self, omega: float) -> complex: ...

    def moments(self) -> tuple[float, float]: ...


StateT = TypeVar("StateT")


class TrackingFilter(LoggingMixin, ABC, Generic[StateT]):
    """Common surface the run loop drives, whatever the state representation."""

    kind: FilterKind

    def __init__(self, freq_range: FrequencyRange, kappa: float) -> None:
        if kappa < 0.0:
            raise ValueError(f"kappa must be non-negative, got {kappa!r}")
        self.freq_range = freq_range
        self.kappa = kappa

    @abstractmethod
    def initial_state(self) -> StateT: ...

    @abstractmethod
    def update(self, state: StateT, outcome: int, settings: RamseySettings) -> StateT: ...

    @abstractmethod
    def predict(self, state: StateT, delta_t: float) -> StateT: ...

    @abstractmethod
    def estimate(self, state: StateT) -> float: ...

    @abstractmethod
    def parameter_count(self, state: StateT) -> int: ...

    @abstractmethod
    def posterior(self, state: StateT) -> SpectralPosterior: ...

    @abstractmethod
    def fallbacks(self, state: StateT) -> tuple[UpdateFallback, ...]:
        """Fallbacks taken by the update that produced ``state``."""

    def report_fallbacks(self, state: StateT, outcome: int, settings: RamseySettings) -> None:
        """Log the fallbacks of the last update; called outside the timed section."""
        for fallback in self.fallbacks(state):
            self.logger.log(
                fallback.level,
                "%s (outcome=%d, tau=%.3g s, theta=%.3f)",
                fallback.value,
                outcome,
                settings.tau,
                settings.theta,
            )
