from __future__ import annotations

from abc import ABC, abstractmethod
from pathlib import Path
from urllib.parse import urlparse

import pyarrow.fs as pafs

from larmortrack.core.logging_mixin import get_logger

_logger = get_logger("output.writer")

REMOTE_SCHEMES = frozenset({"s3", "gs", "gcs", "az", "abfs", "abfss", "file"})


class ResultSink(ABC):
    @abstractmethod
    def supports(self, destination: str | Path) -> bool:
        """Return True when this sink can handle the destination."""

    @abstractmethod
    def write_text(self, destination: str | Path, content: str) -> None: ...

    @abstractmethod
    def read_text(self, source: str | Path) -> str: ...


class LocalFileResultSink(ResultSink):
    def supports(self, destination: str | Path) -> bool:
        return isinstance(destination, Path) or not is_remote(destination)

    def write_text(self, destination: str | Path, content: str) -> None:
        path = Path(destination)
        _logger.info("Writing %s", path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(content, encoding="utf-8")
        _logger.debug("Wrote %d characters to %s", len(content), path)

    def read_text(self, source: str | Path) -> str:
        path = Path(source)
        if not path.is_file():
            raise FileNotFoundError(f"No such file: {path}")
        return path.read_text(encoding="utf-8")


class PyArrowFileSystemResultSink(ResultSink):
    """Object stores and ``file://`` URIs through ``pyarrow.fs``."""

    def supports(self, destination: str | Path) -> bool:
        return isinstance(destination, str) and is_remote(destination)

    def write_text(self, destination: str | Path, content: str) -> None:
        if not isinstance(destination, str):
            raise TypeError("Filesystem URIs must be given as strings.")
        _logger.info("Writing %s", destination)
        filesystem, path = _resolve_filesystem_from_uri(destination)
        _logger.debug("Resolved filesystem URI '%s' to path '%s'", destination, path)
        directory = str(Path(path).parent)
        if directory not in {"", "."}:
            filesystem.create_dir(directory, recursive=True)
        with filesystem.open_output_stream(path) as stream:
            stream.write(content.encode("utf-8"))
        _logger.debug("Wrote %d characters to %s", len(content), destination)

    def read_text(self, source: str | Path) -> str:
        if not isinstance(source, str):
            raise TypeError("Filesystem URIs must be given as strings.")
        filesystem, path = _resolve_filesystem_from_uri(source)
        if filesystem.get_file_info(path).type != pafs.FileType.File:
            raise FileNotFoundError(f"No such file: {source}")
        with filesystem.open_input_stream(path) as stream:
            return stream.read().decode("utf-8")


class ResultWriter:
    def __init__(self, sinks: list[ResultSink] | None = None) -> None:
        self._sinks = sinks or [LocalFileResultSink(), PyArrowFileSystemResultSink()]

    def _sink_for(self, target: str | Path) -> ResultSink:
        for sink in self._sinks:
            if sink.supports(target):
                _logger.debug("Using %s for %s", type(sink).__name__, target)
                return sink
        _logger.error("No result sink supports %r", target)
        raise ValueError(f"Unsupported output destination: {target!r}")

    def write_text(self, destination: str | Path, content: str) -> None:
        self._sink_for(destination).write_text(destination, content)

    def read_text(self, source: str | Path) -> str:
        return self._sink_for(source).read_text(source)


def is_remote(target: str) -> bool:
    return urlparse(target).scheme.lower() in REMOTE_SCHEMES


def write_text_output(destination: str | Path, content: str) -> None:
    ResultWriter().write_text(destination, content)


def read_text_input(source: str | Path) -> str:
    return ResultWriter().read_text(source)


def _resolve_filesystem_from_uri(uri: str) -> tuple[pafs.FileSystem, str]:
    return pafs.FileSystem.from_uri(uri)
