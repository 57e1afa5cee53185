from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class SensingOrder(Enum):
    ASCENDING = "ascending"
    DESCENDING = "descending"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ControllerConfig:
    """Sensing times ``2^k tau_min`` for ``0 <= k < n_sensing_times`` and their repetitions."""

    tau_min: float = 20e-9
    n_sensing_times: int = 10
    repetitions_base: int = 5
    repetitions_step: int = 3
    fom_threshold: float = 1.0
    sensing_order: SensingOrder = SensingOrder.DESCENDING

    def __post_init__(self) -> None:
        if not self.tau_min > 0.0:
            raise ValueError(f"tau_min must be positive, got {self.tau_min!r}")
        if self.n_sensing_times < 1:
            raise ValueError(f"n_sensing_times must be at least 1, got {self.n_sensing_times!r}")
        if self.repetitions_base < 1:
            raise ValueError(f"repetitions_base (G) must be at least 1, got {self.repetitions_base!r}")
        if self.repetitions_step < 0:
            raise ValueError(f"repetitions_step (F) must be non-negative, got {self.repetitions_step!r}")
        if not self.fom_threshold > 0.0:
            raise ValueError(f"fom_threshold must be positive, got {self.fom_threshold!r}")

    @property
    def max_exponent(self) -> int:
        return self.n_sensing_times - 1

    @property
    def tau_max(self) -> float:
        return self.tau_for(self.max_exponent)

    def tau_for(self, k: int) -> float:
        return 2**k * self.tau_min


def sensing_exponents(cfg: ControllerConfig) -> list[tuple[int, int]]:
    """``(k, repetitions)`` per scheduled sensing time, in execution order.

    Repetitions follow the position ``n`` in the schedule, ``G + F (n - 1)``,
    clamped to at least one. In the default descending order the longest time
    comes first with ``G - F`` repetitions and ``tau_min`` comes last with the
    most, ``G + F (N - 2)``.
    """
    exponents = list(range(cfg.n_sensing_times))
    if cfg.sensing_order is SensingOrder.DESCENDING:
        exponents.reverse()
    return [
        (k, max(1, cfg.repetitions_base + cfg.repetitions_step * (n - 1)))
        for n, k in enumerate(exponents)
    ]


def sensing_schedule(cfg: ControllerConfig) -> list[tuple[float, int]]:
    return [(cfg.tau_for(k), repetitions) for k, repetitions in sensing_exponents(cfg)]


def sensing_measurement_count(cfg: ControllerConfig) -> int:
    return sum(repetitions for _, repetitions in sensing_exponents(cfg))
