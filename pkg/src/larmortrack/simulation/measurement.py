from __future__ import annotations

from typing import TYPE_CHECKING

from larmortrack.ramsey.likelihood import likelihood_exact

if TYPE_CHECKING:
    import numpy as np

    from larmortrack.ramsey.settings import RamseySettings


def sample_measurement(f_true: float, settings: RamseySettings, rng: np.random.Generator) -> int:
    """Draw a Ramsey outcome at ``f_true``; ``settings.outcome`` is ignored."""
    p_zero = likelihood_exact(settings.with_outcome(0), f_true)
    return 0 if rng.random() < p_zero else 1
