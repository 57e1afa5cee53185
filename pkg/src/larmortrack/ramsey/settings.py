from __future__ import annotations

import math
from dataclasses import dataclass, replace

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class FrequencyRange:
    """Half-open prior support ``[lo, hi)`` in Hz."""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)) or self.hi <= self.lo:
            raise ValueError(f"FrequencyRange needs finite lo < hi, got [{self.lo!r}, {self.hi!r})")

    @classmethod
    def for_tau_min(cls, tau_min: float, lo: float = 0.0) -> FrequencyRange:
        """The unambiguous range of the shortest sensing time, one period wide."""
        if tau_min <= 0.0:
            raise ValueError(f"tau_min must be positive, got {tau_min!r}")
        return cls(lo, lo + 1.0 / tau_min)

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.lo + self.hi)

    def contains(self, f: float) -> bool:
        return self.lo <= f < self.hi

    def fold(self, f: float) -> float:
        """Reflect ``f`` back into the closed range at both edges."""
        width = self.width
        offset = (f - self.lo) % (2.0 * width)
        if offset > width:
            offset = 2.0 * width - offset
        return self.lo + offset


@dataclass(frozen=True)
class RamseySettings:
    """Controls of one Ramsey measurement.

    ``theta`` is stored reduced into ``[0, 2π)``. ``t2_star`` may be ``inf``
    to switch dephasing off.
    """

    theta: float
    tau: float
    t2_star: float = math.inf
    outcome: int = 0

    def __post_init__(self) -> None:
        if not math.isfinite(self.theta):
            raise ValueError(f"theta must be finite, got {self.theta!r}")
        if not (self.tau > 0.0 and math.isfinite(self.tau)):
            raise ValueError(f"tau must be positive and finite, got {self.tau!r}")
        if not self.t2_star > 0.0:
            raise ValueError(f"t2_star must be positive, got {self.t2_star!r}")
        if self.outcome not in (0, 1):
            raise ValueError(f"outcome must be 0 or 1, got {self.outcome!r}")
        theta = self.theta % TWO_PI
        object.__setattr__(self, "theta", 0.0 if theta >= TWO_PI else theta)

    @property
    def contrast(self) -> float:
        """Fringe visibility ``exp(-(tau / T2*)^2)``."""
        return math.exp(-((self.tau / self.t2_star) ** 2))

    def with_outcome(self, outcome: int) -> RamseySettings:
        return replace(self, outcome=outcome)
