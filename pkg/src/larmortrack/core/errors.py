"""Exception hierarchy shared by every larmortrack subpackage."""

from __future__ import annotations


class LarmorTrackError(Exception):
    """Base class for errors raised by larmortrack."""


class ConfigError(LarmorTrackError, ValueError):
    """Invalid, unknown or inconsistent run configuration."""


class UninitializedStateError(LarmorTrackError, RuntimeError):
    """An operation needs a posterior that does not exist yet."""


class DegenerateMixtureError(LarmorTrackError, ValueError):
    """A mixture carries no mass, so its moments are undefined."""


class SignalExhaustedError(LarmorTrackError, IndexError):
    """A ground-truth signal was queried outside the span it covers."""
