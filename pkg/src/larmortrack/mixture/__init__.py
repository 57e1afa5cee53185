from larmortrack.mixture.component import (
    GaussianComponent,
    convolve_random_walk,
    kl_divergence,
    merge_pair,
    product,
    symmetric_kl,
)
from larmortrack.mixture.mixture import GaussianMixture, evaluate, fourier_coefficient, mixture_moments
from larmortrack.mixture.reduce import ReductionConfig, merge_similar, reduce

__all__ = [
    "GaussianComponent",
    "GaussianMixture",
    "ReductionConfig",
    "convolve_random_walk",
    "evaluate",
    "fourier_coefficient",
    "kl_divergence",
    "merge_pair",
    "merge_similar",
    "mixture_moments",
    "product",
    "reduce",
    "symmetric_kl",
]
