from __future__ import annotations

import math
from typing import TYPE_CHECKING

from tabulate import tabulate

from larmortrack.formatters.base import ReportFormatter
from larmortrack.harness.compare import BASELINE_NOTE, SPEEDUP_FORMULA
from larmortrack.harness.metrics import MSE_FORMULA

if TYPE_CHECKING:
    from collections.abc import Sequence

    from larmortrack.harness.compare import ComparisonRow
    from larmortrack.harness.record import RunRecord
    from larmortrack.harness.sweep import SweepPoint


class MarkdownFormatter(ReportFormatter):
    def format_run(self, record: RunRecord) -> str:
        s = record.summary()
        lines = [
            f"# Tracking run: {s.filter}, seed {s.seed}",
            "",
            f"**Status:** {'FAIL' if s.failed else 'OK'}" + (" (truncated)" if record.truncated else ""),
            "",
            tabulate(
                [
                    ["Measurements", s.n_meas],
                    ["Sensing measurements", record.n_sensing],
                    ["MSE (MHz²)", self._number(s.mse)],
                    ["Mean parameters", f"{s.mean_params:.1f}"],
                    ["Median parameters (tracking)", f"{s.tracking_median_params:g}"],
                    ["Mean compute time (ns)", f"{s.mean_compute_ns:.0f}"],
                ],
                headers=["Metric", "Value"],
                tablefmt="github",
            ),
            "",
            f"`{MSE_FORMULA}`",
        ]
        return "\n".join(lines)

    def format_comparison(self, rows: Sequence[ComparisonRow]) -> str:
        headers = ["T2* (µs)", "t_oh (µs)", "Runs"]
        if not self._config.timing_only:
            headers += ["Baseline F.R.", "Candidate F.R."]
        headers += ["Baseline ns/meas", "Candidate ns/meas", "Speed increase"]
        table: list[list[str]] = []
        for row in rows:
            t2 = "inf" if math.isinf(row.t2_star) else f"{row.t2_star * 1e6:g}"
            cells = [t2, f"{row.t_oh * 1e6:g}", str(row.n_runs)]
            if not self._config.timing_only:
                cells += [f"{row.baseline_fail_rate:.1%}", f"{row.candidate_fail_rate:.1%}"]
            cells += [
                f"{row.baseline_compute_ns:.0f}",
                f"{row.candidate_compute_ns:.0f}",
                f"{row.speed_increase:.2f}",
            ]
            table.append(cells)
        return "\n".join(
            [
                "## Direct comparison",
                "",
                tabulate(table, headers=headers, tablefmt="github"),
                "",
                f"- {BASELINE_NOTE}",
                f"- {SPEEDUP_FORMULA}",
            ]
        )

    def format_sweep(self, points: Sequence[SweepPoint]) -> str:
        axis = str(points[0].axis) if points else "value"
        table = [
            [
                self._number(p.value),
                p.runs,
                self._number(p.gaussian_mean_mse),
                self._number(p.grid_mean_mse),
                f"{p.gaussian_mean_params:.1f}",
                f"{p.grid_mean_params:.0f}",
                f"{p.gaussian_fail_rate:.1%}",
                f"{p.grid_fail_rate:.1%}",
            ]
            for p in points
        ]
        headers = [
            axis,
            "Runs",
            "Gaussian MSE",
            "Grid MSE",
            "Gaussian params",
            "Grid params",
            "Gaussian F.R.",
            "Grid F.R.",
        ]
        return "\n".join([f"## Sweep over {axis}", "", tabulate(table, headers=headers, tablefmt="github")])
