from __future__ import annotations

import json
import math

import numpy as np
import pytest

from larmortrack.filters.base import FilterKind
from larmortrack.harness import direct_compare, run_tracking, sweep
from larmortrack.harness.sweep import SweepAxis
from larmortrack.output.export import (
    ExportFormat,
    export,
    read_records_json,
    read_signal_csv,
    render_csv,
    render_json,
    write_runs_csv,
    write_signal_csv,
    write_trajectory_csv,
)
from larmortrack.simulation.signal import GroundTruthSignal

RUNS_HEADER = "seed,filter,mse,failed,mean_params,mean_compute_ns,n_meas"
TRAJECTORY_HEADER = "idx,time_s,tau_s,theta_rad,outcome,estimate_hz,truth_hz,n_params,compute_ns"
SIGNAL_HEADER = "step_index,time_s,f_hz"


@pytest.fixture()
def record(small_config):
    return run_tracking(small_config.replace(measurement_budget=20))


class TestRender:
    def test_csv_cells(self):
        text = render_csv(("a", "b", "c", "d"), [{"a": True, "b": None, "c": 0.1, "d": 3}])
        assert text == "a,b,c,d\ntrue,,0.1,3\n"

    def test_json_maps_non_finite_to_null(self):
        payload = json.loads(render_json({"x": [math.inf, math.nan, 1.5]}))
        assert payload == {"x": [None, None, 1.5]}


class TestRunsCsv:
    def test_header_only_when_empty(self, tmp_path):
        target = tmp_path / "runs.csv"
        write_runs_csv([], target)
        assert target.read_text() == RUNS_HEADER + "\n"

    def test_export_empty_list(self, tmp_path):
        target = tmp_path / "runs.csv"
        export([], target)
        assert target.read_text() == RUNS_HEADER + "\n"

    def test_one_row_per_record(self, tmp_path, record):
        target = tmp_path / "runs.csv"
        export([record, record], target, ExportFormat.CSV)
        lines = target.read_text().splitlines()
        assert lines[0] == RUNS_HEADER
        assert len(lines) == 3
        fields = lines[1].split(",")
        assert fields[0] == "7"
        assert fields[1] == "gaussian"
        assert fields[3] in {"true", "false"}
        assert float(fields[2]) == record.summary().mse
        assert fields[6] == "20"


class TestTrajectoryCsv:
    def test_header_and_rows(self, tmp_path, record):
        target = tmp_path / "trajectory.csv"
        write_trajectory_csv(record, target)
        lines = target.read_text().splitlines()
        assert lines[0] == TRAJECTORY_HEADER
        assert len(lines) == 21
        first = dict(zip(TRAJECTORY_HEADER.split(","), lines[1].split(","), strict=True))
        assert float(first["tau_s"]) == record.rows[0].tau_s
        assert float(first["estimate_hz"]) == record.rows[0].estimate_hz


class TestSignalCsv:
    def test_round_trip(self, tmp_path):
        signal = GroundTruthSignal(f0=2e7, kappa=1e6, step=20e-9, values=np.array([2e7, 2.0001e7, 1.9999e7]))
        target = tmp_path / "signal.csv"
        write_signal_csv(signal, target)
        assert target.read_text().splitlines()[0] == SIGNAL_HEADER

        restored = read_signal_csv(target, kappa=1e6, seed=3)
        np.testing.assert_array_equal(restored.values, signal.values)
        assert restored.step == pytest.approx(20e-9)
        assert restored.f0 == 2e7
        assert restored.seed == 3

    def test_single_sample(self, tmp_path):
        target = tmp_path / "signal.csv"
        target.write_text(f"{SIGNAL_HEADER}\n0,0.0,5000000.0\n")
        restored = read_signal_csv(target)
        assert restored.step == 1.0
        assert len(restored) == 1

    @pytest.mark.parametrize(
        ("text", "match"),
        [
            ("index,t,f\n0,0.0,1.0\n", "expected columns"),
            (f"{SIGNAL_HEADER}\n", "no samples"),
            (f"{SIGNAL_HEADER}\n0,0.0,1.0\n2,2.0,1.0\n", "without gaps"),
        ],
    )
    def test_invalid(self, tmp_path, text, match):
        target = tmp_path / "signal.csv"
        target.write_text(text)
        with pytest.raises(ValueError, match=match):
            read_signal_csv(target)


class TestRecordsJson:
    def test_round_trip_keeps_summaries(self, tmp_path, record):
        target = tmp_path / "records.json"
        export([record], target, "json")
        payload = json.loads(target.read_text())
        assert "mse_formula" in payload
        (restored,) = read_records_json(target)
        assert restored.summary() == record.summary()
        assert [r.without_timing() for r in restored.rows] == [r.without_timing() for r in record.rows]

    def test_infinite_coherence_becomes_null(self, tmp_path, small_config):
        rec = run_tracking(small_config.replace(measurement_budget=5, t2_star=math.inf))
        target = tmp_path / "records.json"
        export([rec], target, ExportFormat.JSON)
        assert json.loads(target.read_text())["records"][0]["config"]["t2star_s"] is None

    def test_summaries_as_json(self, tmp_path, record):
        target = tmp_path / "runs.json"
        export([record.summary()], target, "json")
        assert json.loads(target.read_text())[0]["n_meas"] == 20


class TestTables:
    def test_comparison_csv(self, tmp_path, small_config):
        cfg = small_config.replace(measurement_budget=60)
        row = direct_compare((cfg.replace(filter_kind=FilterKind.GRID), cfg), 1)
        target = tmp_path / "table.csv"
        export([row], target)
        header, line = target.read_text().splitlines()
        assert header.split(",") == list(row.to_row())
        assert line.split(",")[4:6] == ["grid", "gaussian"]

    def test_sweep_json(self, tmp_path, small_config):
        points = sweep(small_config.replace(measurement_budget=60), SweepAxis.KAPPA, [2e6], 1)
        target = tmp_path / "sweep.json"
        export(points, target, ExportFormat.JSON)
        (payload,) = json.loads(target.read_text())
        assert payload["axis"] == "kappa"
        assert payload["value"] == 2e6

    def test_unknown_format(self, tmp_path):
        with pytest.raises(ValueError):
            export([], tmp_path / "x", "xml")
