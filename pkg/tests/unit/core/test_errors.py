from __future__ import annotations

import pytest

from larmortrack.core.errors import (
    ConfigError,
    DegenerateMixtureError,
    LarmorTrackError,
    SignalExhaustedError,
    UninitializedStateError,
)


class TestErrorHierarchy:
    @pytest.mark.parametrize(
        ("error", "builtin"),
        [
            (ConfigError, ValueError),
            (DegenerateMixtureError, ValueError),
            (UninitializedStateError, RuntimeError),
            (SignalExhaustedError, IndexError),
        ],
    )
    def test_subclasses(self, error, builtin):
        assert issubclass(error, LarmorTrackError)
        assert issubclass(error, builtin)

    def test_caught_as_base(self):
        with pytest.raises(LarmorTrackError, match="bad key"):
            raise ConfigError("bad key")
