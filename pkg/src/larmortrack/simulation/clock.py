from __future__ import annotations

from dataclasses import dataclass


@dataclass
class ExperimentClock:
    """Laboratory time elapsed, advanced by ``tau + t_oh`` per measurement."""

    t_oh: float
    t: float = 0.0

    def __post_init__(self) -> None:
        if self.t_oh < 0.0:
            raise ValueError(f"t_oh must be non-negative, got {self.t_oh!r}")

    def advance(self, tau: float) -> float:
        """Account for one measurement and return its duration ``delta_t``."""
        if not tau > 0.0:
            raise ValueError(f"tau must be positive, got {tau!r}")
        delta_t = tau + self.t_oh
        self.t += delta_t
        return delta_t
