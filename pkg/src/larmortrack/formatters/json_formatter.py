from __future__ import annotations

from typing import TYPE_CHECKING, Any

from larmortrack.formatters.base import ReportFormatter
from larmortrack.harness.compare import BASELINE_NOTE, SPEEDUP_FORMULA
from larmortrack.harness.metrics import MSE_FORMULA
from larmortrack.output.export import render_json

if TYPE_CHECKING:
    from collections.abc import Sequence

    from larmortrack.harness.compare import ComparisonRow
    from larmortrack.harness.record import RunRecord
    from larmortrack.harness.sweep import SweepPoint

_TIMING_KEYS = (
    "t2star_s",
    "overhead_s",
    "n_runs",
    "baseline",
    "candidate",
    "baseline_compute_ns",
    "candidate_compute_ns",
    "speed_increase",
)


class JsonFormatter(ReportFormatter):
    def format_run(self, record: RunRecord) -> str:
        payload: dict[str, Any] = {
            "summary": record.summary().to_row(),
            "n_sensing": record.n_sensing,
            "truncated": record.truncated,
            "config_hash": record.config_hash,
            "mse_formula": MSE_FORMULA,
        }
        return self._dump(payload)

    def format_comparison(self, rows: Sequence[ComparisonRow]) -> str:
        items = [row.to_row() for row in rows]
        if self._config.timing_only:
            items = [{key: item[key] for key in _TIMING_KEYS} for item in items]
        return self._dump({"baseline_note": BASELINE_NOTE, "speedup_formula": SPEEDUP_FORMULA, "rows": items})

    def format_sweep(self, points: Sequence[SweepPoint]) -> str:
        return self._dump({"mse_formula": MSE_FORMULA, "points": [point.to_row() for point in points]})

    def _dump(self, payload: dict[str, Any]) -> str:
        output = render_json(payload).rstrip()
        self.logger.debug("JSON report: %d chars", len(output))
        return output
