"""
Grid baseline vs Gaussian filter — larmortrack Benchmark Runner
================================================================

No data to download: every run simulates its own ground truth from a seed.

    python benchmarks/run_benchmark.py                      # comparison table + both sweeps
    python benchmarks/run_benchmark.py --section table --runs 400
    python benchmarks/run_benchmark.py --section sweeps --workers 8

The comparison table pairs T2* in {100, 10, 1} µs with overheads in
{10, 6, 2} µs at kappa = 10 MHz·Hz^1/2 over 5 ms runs. The sweeps vary kappa
at a 10 µs overhead and the overhead at kappa = 10, with 1000 measurements
per run. Compute times are measured sequentially; sweeps may use a pool.
"""

from __future__ import annotations

import itertools
import logging
import sys
import time
from pathlib import Path

# Ensure the project root is importable when running as a script.
_PROJECT_ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(_PROJECT_ROOT / "src"))

from larmortrack.config import RunConfig  # noqa: E402
from larmortrack.config.builder import MHZ, US  # noqa: E402
from larmortrack.core.logging_mixin import configure_logging  # noqa: E402
from larmortrack.filters.base import FilterKind  # noqa: E402
from larmortrack.formatters import HumanFormatter, JsonFormatter, MarkdownFormatter  # noqa: E402
from larmortrack.harness import SweepAxis, direct_compare, sweep  # noqa: E402
from larmortrack.output import ExportFormat, export  # noqa: E402

FORMATTERS = {
    "human": HumanFormatter,
    "markdown": MarkdownFormatter,
    "json": JsonFormatter,
}

T2_STAR_US = (100.0, 10.0, 1.0)
OVERHEAD_US = (10.0, 6.0, 2.0)
KAPPA_SWEEP_MHZ = (2.0, 5.0, 10.0, 20.0)
OVERHEAD_SWEEP_US = (2.0, 6.0, 10.0, 20.0)
SWEEP_MEASUREMENTS = 1000

SEPARATOR = "=" * 72


def _print_header(base: RunConfig, runs: int, sweep_runs: int, workers: int) -> None:
    print(SEPARATOR)
    print("  larmortrack Benchmark — grid baseline vs Gaussian filter")
    print(SEPARATOR)
    print(f"  kappa          : {base.kappa / MHZ:g} MHz·Hz^1/2")
    print(f"  tau_min        : {base.tau_min * 1e9:g} ns, N = {base.controller.n_sensing_times}")
    print(f"  Grid bins      : {base.resolved_grid_points}")
    print(f"  Table runs     : {runs} per row (5 ms each)")
    print(f"  Sweep runs     : {sweep_runs} per point ({SWEEP_MEASUREMENTS} measurements each)")
    print(f"  Sweep workers  : {workers}")
    print(SEPARATOR)
    print()


def _run_table(base: RunConfig, runs: int, seed0: int, fmt_name: str, out_dir: Path | None) -> None:
    print("⏱  Direct comparison on shared signals …")
    print()
    seeds = list(range(seed0, seed0 + runs))
    rows = []
    t_start = time.perf_counter()
    for t2_star, t_oh in itertools.product(T2_STAR_US, OVERHEAD_US):
        cfg = base.replace(t2_star=t2_star * US, t_oh=t_oh * US)
        pair = (cfg.replace(filter_kind=FilterKind.GRID), cfg.replace(filter_kind=FilterKind.GAUSSIAN))
        rows.append(direct_compare(pair, runs, seeds))
    elapsed = time.perf_counter() - t_start

    print(FORMATTERS[fmt_name]().format_comparison(rows))
    print()
    print(f"  Wall-clock     : {elapsed:,.1f}s for {len(rows) * runs * 2} runs")
    if out_dir is not None:
        export(rows, out_dir / "comparison.csv", ExportFormat.CSV)
    print()


def _run_sweeps(
    base: RunConfig,
    sweep_runs: int,
    workers: int,
    fmt_name: str,
    out_dir: Path | None,
) -> None:
    cfg = base.replace(total_time=None, measurement_budget=SWEEP_MEASUREMENTS)
    plan = (
        (SweepAxis.KAPPA, [value * MHZ for value in KAPPA_SWEEP_MHZ], cfg.replace(t_oh=10 * US)),
        (SweepAxis.OVERHEAD, [value * US for value in OVERHEAD_SWEEP_US], cfg),
    )
    for axis, values, axis_cfg in plan:
        print(f"⏱  Sweeping {axis} …")
        print()
        t_start = time.perf_counter()
        points = sweep(axis_cfg, axis, values, sweep_runs, workers=workers)
        elapsed = time.perf_counter() - t_start
        print(FORMATTERS[fmt_name]().format_sweep(points))
        print()
        print(f"  Wall-clock     : {elapsed:,.1f}s")
        if out_dir is not None:
            export(points, out_dir / f"sweep_{axis}.csv", ExportFormat.CSV)
        print()


def main() -> None:
    import argparse

    parser = argparse.ArgumentParser(
        description="larmortrack benchmark runner — grid baseline vs Gaussian filter",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
examples:
  python benchmarks/run_benchmark.py                        # human-readable output
  python benchmarks/run_benchmark.py --format markdown --runs 50
  python benchmarks/run_benchmark.py --section sweeps --sweep-runs 200 --workers 8
        """,
    )
    parser.add_argument(
        "--format",
        choices=list(FORMATTERS.keys()),
        default="human",
        help="output format (default: human)",
    )
    parser.add_argument(
        "--section",
        choices=["table", "sweeps", "all"],
        default="all",
        help="what to run (default: all)",
    )
    parser.add_argument("--runs", type=int, default=400, help="shared-signal runs per row (default: 400)")
    parser.add_argument("--sweep-runs", type=int, default=100, help="runs per sweep point (default: 100)")
    parser.add_argument("--workers", type=int, default=1, help="process pool size for sweeps (default: 1)")
    parser.add_argument("--seed0", type=int, default=0, help="first run seed (default: 0)")
    parser.add_argument("--out-dir", type=Path, default=None, help="also write CSV tables here")
    parser.add_argument("-v", "--verbose", action="store_true", help="log run progress")
    args = parser.parse_args()

    configure_logging(level=logging.INFO if args.verbose else logging.WARNING)
    base = RunConfig(kappa=10 * MHZ, seed=args.seed0)
    _print_header(base, args.runs, args.sweep_runs, args.workers)

    if args.section in ("table", "all"):
        _run_table(base, args.runs, args.seed0, args.format, args.out_dir)
    if args.section in ("sweeps", "all"):
        _run_sweeps(base, args.sweep_runs, args.workers, args.format, args.out_dir)
    print(SEPARATOR)


if __name__ == "__main__":
    main()
