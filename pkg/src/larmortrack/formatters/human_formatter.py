from __future__ import annotations

import math
from io import StringIO
from typing import TYPE_CHECKING

from rich.console import Console
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

from larmortrack.formatters.base import ReportFormatter
from larmortrack.harness.compare import BASELINE_NOTE
from larmortrack.harness.metrics import HZ_PER_MHZ

if TYPE_CHECKING:
    from collections.abc import Sequence

    from rich.console import RenderableType

    from larmortrack.harness.compare import ComparisonRow
    from larmortrack.harness.record import RunRecord
    from larmortrack.harness.sweep import SweepPoint

_US = 1e-6


class HumanFormatter(ReportFormatter):
    def format_run(self, record: RunRecord) -> str:
        summary = record.summary()
        status_style = "red" if summary.failed else "green"
        body = Text()
        body.append(f"{summary.filter} filter, seed {summary.seed}", style="bold")
        body.append("\nTracking: ", style="dim")
        body.append("FAIL" if summary.failed else "OK", style=f"bold {status_style}")
        if record.truncated:
            body.append("  (signal exhausted early)", style="yellow")

        table = Table(title="Summary", box=None, show_header=False, pad_edge=False)
        table.add_column("Metric", style="cyan", no_wrap=True)
        table.add_column("Value")
        table.add_row("Measurements", str(summary.n_meas))
        table.add_row("Sensing measurements", str(record.n_sensing))
        table.add_row("MSE", f"{self._number(summary.mse)} MHz²")
        table.add_row("Fail threshold", f"{self._number(record.fail_threshold)} MHz²")
        table.add_row("Mean parameters", f"{summary.mean_params:.1f}")
        table.add_row("Median parameters (tracking)", f"{summary.tracking_median_params:g}")
        table.add_row("Mean compute time", f"{summary.mean_compute_ns:,.0f} ns")
        if record.rows:
            last = record.rows[-1]
            table.add_row(
                "Final estimate / truth",
                f"{last.estimate_hz / HZ_PER_MHZ:.4f} / {last.truth_hz / HZ_PER_MHZ:.4f} MHz",
            )
        return self._render(Panel(body, border_style=status_style, title="larmortrack", expand=True), table)

    def format_comparison(self, rows: Sequence[ComparisonRow]) -> str:
        table = Table(title="Direct comparison", expand=True)
        table.add_column("T2* (µs)", justify="right", no_wrap=True)
        table.add_column("t_oh (µs)", justify="right", no_wrap=True)
        table.add_column("Runs", justify="right")
        if not self._config.timing_only:
            table.add_column("Baseline F.R.", justify="right")
            table.add_column("Candidate F.R.", justify="right")
        table.add_column("Baseline ns/meas", justify="right")
        table.add_column("Candidate ns/meas", justify="right")
        table.add_column("Speed increase", justify="right", style="bold")

        for row in rows:
            cells = [self._microseconds(row.t2_star), self._microseconds(row.t_oh), str(row.n_runs)]
            if not self._config.timing_only:
                cells += [f"{row.baseline_fail_rate:.1%}", f"{row.candidate_fail_rate:.1%}"]
            cells += [
                f"{row.baseline_compute_ns:,.0f}",
                f"{row.candidate_compute_ns:,.0f}",
                f"{row.speed_increase:.2f}x",
            ]
            table.add_row(*cells)
        return self._render(table, Text(BASELINE_NOTE, style="dim"))

    def format_sweep(self, points: Sequence[SweepPoint]) -> str:
        axis = str(points[0].axis) if points else "value"
        table = Table(title=f"Sweep over {axis}", expand=True)
        table.add_column(axis, justify="right", style="cyan", no_wrap=True)
        table.add_column("Runs", justify="right")
        table.add_column("Gaussian MSE", justify="right")
        table.add_column("Grid MSE", justify="right")
        table.add_column("Gaussian params", justify="right")
        table.add_column("Grid params", justify="right")
        for point in points:
            table.add_row(
                self._number(point.value),
                str(point.runs),
                self._number(point.gaussian_mean_mse),
                self._number(point.grid_mean_mse),
                f"{point.gaussian_mean_params:.1f}",
                f"{point.grid_mean_params:.0f}",
            )
        return self._render(table)

    def _render(self, *renderables: RenderableType) -> str:
        buffer = StringIO()
        console = Console(
            file=buffer,
            force_terminal=self._config.colorize,
            color_system="standard" if self._config.colorize else None,
            no_color=not self._config.colorize,
            width=110,
            soft_wrap=False,
        )
        for renderable in renderables:
            console.print(renderable)
        output = buffer.getvalue().rstrip()
        self.logger.debug("Human report: %d chars", len(output))
        return output

    def _microseconds(self, seconds: float) -> str:
        return "inf" if math.isinf(seconds) else f"{seconds / _US:g}"
