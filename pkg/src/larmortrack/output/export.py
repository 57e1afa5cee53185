"""CSV and JSON export of run records, signals and result tables.

CSV floats are written with ``repr`` so values survive a round trip
bit-for-bit. JSON has no infinity, so ``inf`` and ``nan`` become ``null``.
"""

from __future__ import annotations

import csv
import io
import json
import math
from enum import Enum
from typing import TYPE_CHECKING, Any

import numpy as np

from larmortrack.core.logging_mixin import get_logger
from larmortrack.harness.metrics import MSE_FORMULA
from larmortrack.harness.record import RUNS_COLUMNS, TRAJECTORY_COLUMNS, RunRecord, RunSummary
from larmortrack.output.writer import read_text_input, write_text_output
from larmortrack.simulation.signal import GroundTruthSignal

if TYPE_CHECKING:
    from collections.abc import Iterable, Mapping, Sequence
    from pathlib import Path

    from larmortrack.harness.compare import ComparisonRow
    from larmortrack.harness.sweep import SweepPoint

_logger = get_logger("output.export")

SIGNAL_COLUMNS = ("step_index", "time_s", "f_hz")


class ExportFormat(Enum):
    CSV = "csv"
    JSON = "json"

    def __str__(self) -> str:
        return self.value


def render_csv(columns: Sequence[str], rows: Iterable[Mapping[str, Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_csv_cell(row[name]) for name in columns])
    return buffer.getvalue()


def render_json(payload: Any) -> str:
    return json.dumps(_json_safe(payload), indent=2, allow_nan=False) + "\n"


def write_runs_csv(summaries: Sequence[RunSummary], destination: str | Path) -> None:
    write_text_output(destination, render_csv(RUNS_COLUMNS, (s.to_row() for s in summaries)))


def write_trajectory_csv(record: RunRecord, destination: str | Path) -> None:
    write_text_output(destination, render_csv(TRAJECTORY_COLUMNS, (r.to_dict() for r in record.rows)))


def write_signal_csv(signal: GroundTruthSignal, destination: str | Path) -> None:
    rows = (
        {"step_index": index, "time_s": index * signal.step, "f_hz": float(value)}
        for index, value in enumerate(signal.values)
    )
    write_text_output(destination, render_csv(SIGNAL_COLUMNS, rows))


def read_signal_csv(
    source: str | Path,
    kappa: float | None = None,
    seed: int | None = None,
) -> GroundTruthSignal:
    """Load a signal written by :func:`write_signal_csv`.

    The step is recovered from the time column, so a file needs at least two
    rows unless it holds a single sample at ``t=0`` (then the step is 1 s).
    """
    reader = csv.DictReader(io.StringIO(read_text_input(source)))
    if tuple(reader.fieldnames or ()) != SIGNAL_COLUMNS:
        raise ValueError(f"{source}: expected columns {','.join(SIGNAL_COLUMNS)}, got {reader.fieldnames}")
    rows = list(reader)
    if not rows:
        raise ValueError(f"{source}: signal file has no samples")
    indices = [int(row["step_index"]) for row in rows]
    if indices != list(range(len(rows))):
        raise ValueError(f"{source}: step_index must run 0, 1, 2, ... without gaps")
    values = np.array([float(row["f_hz"]) for row in rows], dtype=np.float64)
    step = float(rows[1]["time_s"]) - float(rows[0]["time_s"]) if len(rows) > 1 else 1.0
    _logger.debug("Read %d-sample signal from %s (step %.6g s)", values.size, source, step)
    return GroundTruthSignal(f0=float(values[0]), kappa=kappa, step=step, values=values, seed=seed)


def write_records_json(records: Sequence[RunRecord], destination: str | Path) -> None:
    payload = {"mse_formula": MSE_FORMULA, "records": [record.to_dict() for record in records]}
    write_text_output(destination, render_json(payload))


def read_records_json(source: str | Path) -> list[RunRecord]:
    payload = json.loads(read_text_input(source))
    items = payload["records"] if isinstance(payload, dict) else payload
    return [RunRecord.from_dict(item) for item in items]


def export(
    items: Sequence[RunRecord] | Sequence[RunSummary] | Sequence[ComparisonRow] | Sequence[SweepPoint],
    destination: str | Path,
    fmt: ExportFormat | str = ExportFormat.CSV,
) -> None:
    """Write records or a result table as CSV or JSON.

    Records go to CSV as one runs row each; JSON keeps them whole. An empty
    list produces a header-only runs CSV.
    """
    fmt = ExportFormat(str(fmt))
    items = list(items)
    _logger.info("Exporting %d items as %s to %s", len(items), fmt, destination)
    if not items or isinstance(items[0], RunRecord | RunSummary):
        summaries = [item.summary() if isinstance(item, RunRecord) else item for item in items]
        if fmt is ExportFormat.CSV:
            write_runs_csv(summaries, destination)
        elif items and isinstance(items[0], RunRecord):
            write_records_json(items, destination)
        else:
            write_text_output(destination, render_json([s.to_row() for s in summaries]))
        return

    rows = [item.to_row() for item in items]
    if fmt is ExportFormat.CSV:
        write_text_output(destination, render_csv(tuple(rows[0]), rows))
    else:
        write_text_output(destination, render_json(rows))


def _csv_cell(value: Any) -> Any:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    if value is None:
        return ""
    return value


def _json_safe(value: Any) -> Any:
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, dict):
        return {key: _json_safe(item) for key, item in value.items()}
    if isinstance(value, list | tuple):
        return [_json_safe(item) for item in value]
    return value
