from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import TYPE_CHECKING

from larmortrack.core.logging_mixin import LoggingMixin

if TYPE_CHECKING:
    from collections.abc import Sequence

    from larmortrack.harness.compare import ComparisonRow
    from larmortrack.harness.record import RunRecord
    from larmortrack.harness.sweep import SweepPoint


@dataclass(frozen=True)
class FormatterConfig:
    colorize: bool = True
    precision: int = 4
    timing_only: bool = False


class ReportFormatter(LoggingMixin, ABC):
    def __init__(self, config: FormatterConfig | None = None) -> None:
        self._config = config or FormatterConfig()

    @abstractmethod
    def format_run(self, record: RunRecord) -> str: ...

    @abstractmethod
    def format_comparison(self, rows: Sequence[ComparisonRow]) -> str:
        """Render a comparison table; ``timing_only`` drops the accuracy columns."""

    @abstractmethod
    def format_sweep(self, points: Sequence[SweepPoint]) -> str: ...

    def _number(self, value: float) -> str:
        return f"{value:.{self._config.precision}g}"
