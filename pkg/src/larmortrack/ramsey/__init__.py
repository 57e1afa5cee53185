from larmortrack.ramsey.likelihood import (
    comb_indices,
    comb_sigma,
    likelihood_comb,
    likelihood_exact,
    likelihood_exact_array,
    peak_centre,
    window_indices,
    windowed_comb,
)
from larmortrack.ramsey.settings import FrequencyRange, RamseySettings

__all__ = [
    "FrequencyRange",
    "RamseySettings",
    "comb_indices",
    "comb_sigma",
    "likelihood_comb",
    "likelihood_exact",
    "likelihood_exact_array",
    "peak_centre",
    "window_indices",
    "windowed_comb",
]
