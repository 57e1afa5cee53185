from larmortrack.core.errors import (
    ConfigError,
    DegenerateMixtureError,
    LarmorTrackError,
    SignalExhaustedError,
    UninitializedStateError,
)
from larmortrack.core.logging_mixin import LoggingMixin, configure_logging, get_logger

__all__ = [
    "ConfigError",
    "DegenerateMixtureError",
    "LarmorTrackError",
    "LoggingMixin",
    "SignalExhaustedError",
    "UninitializedStateError",
    "configure_logging",
    "get_logger",
]
