from larmortrack.output.export import (
    SIGNAL_COLUMNS,
    ExportFormat,
    export,
    read_records_json,
    read_signal_csv,
    render_csv,
    render_json,
    write_records_json,
    write_runs_csv,
    write_signal_csv,
    write_trajectory_csv,
)
from larmortrack.output.writer import (
    LocalFileResultSink,
    PyArrowFileSystemResultSink,
    ResultSink,
    ResultWriter,
    read_text_input,
    write_text_output,
)

__all__ = [
    "SIGNAL_COLUMNS",
    "ExportFormat",
    "LocalFileResultSink",
    "PyArrowFileSystemResultSink",
    "ResultSink",
    "ResultWriter",
    "export",
    "read_records_json",
    "read_signal_csv",
    "read_text_input",
    "render_csv",
    "render_json",
    "write_records_json",
    "write_runs_csv",
    "write_signal_csv",
    "write_text_output",
    "write_trajectory_csv",
]
