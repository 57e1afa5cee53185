from larmortrack.filters.base import FilterKind, SpectralPosterior, TrackingFilter, UpdateFallback
from larmortrack.filters.gaussian import (
    FilterState,
    GaussianFilter,
    GaussianFilterConfig,
    estimate,
    init_uniform,
    parameter_count,
    predict,
    update,
)
from larmortrack.filters.grid import (
    GridDistribution,
    GridFilter,
    default_grid_points,
    discretize,
    estimate_grid,
    init_grid,
    predict_grid,
    update_grid,
)

__all__ = [
    "FilterKind",
    "FilterState",
    "GaussianFilter",
    "GaussianFilterConfig",
    "GridDistribution",
    "GridFilter",
    "SpectralPosterior",
    "TrackingFilter",
    "UpdateFallback",
    "default_grid_points",
    "discretize",
    "estimate",
    "estimate_grid",
    "init_grid",
    "init_uniform",
    "parameter_count",
    "predict",
    "predict_grid",
    "update",
    "update_grid",
]
