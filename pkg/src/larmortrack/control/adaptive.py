"""Adaptive control phase and sensing time.

The phase rule reads the prior's characteristic function at twice the
current sensing time, ``omega = 4 pi tau_n``, and takes half its argument.
The sensing time halves while the posterior is wider than about one radian
of accumulated phase and doubles otherwise.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

from larmortrack.ramsey.settings import TWO_PI

if TYPE_CHECKING:
    from larmortrack.control.schedule import ControllerConfig
    from larmortrack.filters.base import SpectralPosterior

DEGENERATE_RELATIVE_MODULUS = 1e-12


@dataclass(frozen=True)
class SensingTimeState:
    k: int

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError(f"k must be non-negative, got {self.k!r}")

    @property
    def t_n(self) -> int:
        return 2**self.k

    def tau(self, tau_min: float) -> float:
        return self.t_n * tau_min


def phase_frequency(t_n: int, tau_min: float) -> float:
    return 4.0 * math.pi * t_n * tau_min


def choose_phase(prior: SpectralPosterior, t_n: int, tau_min: float) -> float:
    """Control phase for the next measurement at sensing time ``t_n tau_min``.

    Returns 0 when the prior is flat at the queried frequency, i.e. when
    ``|p| < 1e-12 |p(0)|``.
    """
    coefficient = prior.fourier_coefficient(phase_frequency(t_n, tau_min))
    total = abs(prior.fourier_coefficient(0.0))
    if total == 0.0 or abs(coefficient) < DEGENERATE_RELATIVE_MODULUS * total:
        return 0.0
    theta = (0.5 * cmath.phase(coefficient)) % TWO_PI
    return 0.0 if theta >= TWO_PI else theta


def figure_of_merit(posterior: SpectralPosterior, tau_n: float) -> float:
    _, variance = posterior.moments()
    return math.sqrt(variance) * TWO_PI * tau_n


def choose_sensing_time(state: SensingTimeState, fom: float, cfg: ControllerConfig) -> SensingTimeState:
    k = state.k - 1 if fom > cfg.fom_threshold else state.k + 1
    return SensingTimeState(min(max(k, 0), cfg.max_exponent))
