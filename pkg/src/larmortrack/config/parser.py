from __future__ import annotations

from pathlib import Path
from typing import Any
from urllib.parse import urlparse

import pyarrow.fs as pafs
import yaml

from larmortrack.core.errors import ConfigError
from larmortrack.core.logging_mixin import get_logger

_logger = get_logger("config.parser")
_SUPPORTED_FILESYSTEM_URI_SCHEMES = frozenset({"s3", "gs", "gcs", "az", "abfs", "abfss", "file"})
_YAML_SUFFIXES = frozenset({".yaml", ".yml"})


def load_config(source: str | Path) -> dict[str, Any]:
    """Load a run configuration file into a flat dict of raw values.

    *source* may be a local path or a filesystem URI. ``.yaml``/``.yml`` files
    are read as a YAML mapping; anything else as ``key = value`` lines with
    ``#`` comments. Missing files raise :class:`FileNotFoundError`.
    """
    label = str(source)
    if isinstance(source, str) and _is_filesystem_uri(source):
        _logger.debug("Loading config from filesystem URI: %s", source)
        text = _read_uri(source)
    else:
        path = Path(source)
        if not path.is_file():
            _logger.error("Config file not found: %s", path)
            raise FileNotFoundError(f"Config file not found: {path}")
        _logger.debug("Loading config from file: %s", path)
        text = path.read_text(encoding="utf-8")

    if Path(urlparse(label).path or label).suffix.lower() in _YAML_SUFFIXES:
        return parse_yaml_text(text, label)
    return parse_key_value_text(text, label)


def parse_yaml_text(text: str, source_label: str = "<inline>") -> dict[str, Any]:
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise ConfigError(f"Invalid YAML in {source_label}: {exc}") from exc
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigError(f"YAML config from {source_label} must be a mapping at the top level.")
    return {str(key): value for key, value in data.items()}


def parse_key_value_text(text: str, source_label: str = "<inline>") -> dict[str, Any]:
    """Parse ``key = value`` lines; values are read as YAML scalars (``10``, ``1e-3``, ``true``)."""
    values: dict[str, Any] = {}
    for number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, raw_value = line.partition("=")
        key = key.strip()
        if not sep or not key:
            _logger.error("Malformed config line %d in %s: %r", number, source_label, raw_line)
            raise ConfigError(f"{source_label}:{number}: expected 'key = value', got {raw_line.strip()!r}")
        if key in values:
            raise ConfigError(f"{source_label}:{number}: duplicate key {key!r}")
        values[key] = _parse_scalar(raw_value.strip(), f"{source_label}:{number}")
    _logger.debug("Parsed %d config keys from %s", len(values), source_label)
    return values


def _parse_scalar(raw: str, where: str) -> Any:
    if raw == "":
        return None
    try:
        value = yaml.safe_load(raw)
    except yaml.YAMLError as exc:
        raise ConfigError(f"{where}: cannot parse value {raw!r}: {exc}") from exc
    if isinstance(value, (dict, list)):
        raise ConfigError(f"{where}: expected a scalar value, got {raw!r}")
    return value


def _is_filesystem_uri(source: str) -> bool:
    return urlparse(source).scheme.lower() in _SUPPORTED_FILESYSTEM_URI_SCHEMES


def _read_uri(source: str) -> str:
    filesystem, path = pafs.FileSystem.from_uri(source)
    with filesystem.open_input_stream(path) as input_stream:
        return input_stream.read().decode("utf-8")
