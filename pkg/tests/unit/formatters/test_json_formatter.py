import json

from larmortrack.formatters.base import FormatterConfig
from larmortrack.formatters.json_formatter import JsonFormatter
from larmortrack.harness.record import RUNS_COLUMNS


class TestJsonFormatter:
    def test_format_run(self, good_record):
        payload = json.loads(JsonFormatter().format_run(good_record))

        assert tuple(payload["summary"]) == RUNS_COLUMNS
        assert payload["summary"]["seed"] == 11
        assert payload["summary"]["failed"] is False
        assert payload["n_sensing"] == 1
        assert payload["config_hash"] == "abc123"
        assert "mse_formula" in payload

    def test_format_comparison(self, comparison_rows):
        payload = json.loads(JsonFormatter().format_comparison(comparison_rows))

        assert len(payload["rows"]) == 2
        assert payload["rows"][0]["speed_increase"] == 8.0
        assert payload["rows"][1]["t2star_s"] is None
        assert "baseline_note" in payload

    def test_timing_only_keeps_timing_keys(self, comparison_rows):
        formatter = JsonFormatter(FormatterConfig(timing_only=True))
        payload = json.loads(formatter.format_comparison(comparison_rows))

        assert "baseline_fail_rate" not in payload["rows"][0]
        assert payload["rows"][0]["candidate_compute_ns"] == 12_000.0

    def test_format_sweep(self, sweep_points):
        payload = json.loads(JsonFormatter().format_sweep(sweep_points))

        assert [p["value"] for p in payload["points"]] == [1e6, 10e6]
        assert payload["points"][0]["axis"] == "kappa"
