"""Turn raw config values in display units into a validated :class:`RunConfig`.

Config files and CLI flags speak the units the lab uses (ns, µs, ms, MHz,
MHz·Hz^½); everything is converted to SI here and nowhere else.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any

from larmortrack.config.run_config import MseWindow, RunConfig
from larmortrack.control.schedule import SensingOrder
from larmortrack.core.errors import ConfigError
from larmortrack.core.logging_mixin import get_logger
from larmortrack.filters.base import FilterKind

if TYPE_CHECKING:
    from collections.abc import Callable, Mapping

_logger = get_logger("config.builder")

NS = 1e-9
US = 1e-6
MS = 1e-3
MHZ = 1e6


@dataclass(frozen=True)
class ConfigKey:
    """One accepted config key: where it lands in :class:`RunConfig` and how it converts."""

    name: str
    section: str | None
    field: str
    convert: Callable[[Any], Any]
    description: str


def _as_float(value: Any) -> float:
    if isinstance(value, bool):
        raise TypeError("booleans are not numbers here")
    return float(value)


def _as_int(value: Any) -> int:
    if isinstance(value, bool):
        raise TypeError("booleans are not integers here")
    if isinstance(value, float):
        if not value.is_integer():
            raise ValueError(f"{value!r} is not an integer")
        return int(value)
    return int(value)


def _optional(convert: Callable[[Any], Any]) -> Callable[[Any], Any]:
    def wrapped(value: Any) -> Any:
        if value is None or (isinstance(value, str) and value.lower() in {"none", "null", ""}):
            return None
        return convert(value)

    return wrapped


def _scaled(factor: float) -> Callable[[Any], float]:
    def convert(value: Any) -> float:
        number = _as_float(value)
        return number if math.isinf(number) else number * factor

    return convert


def _enum(enum_type: type) -> Callable[[Any], Any]:
    def convert(value: Any) -> Any:
        return enum_type(str(value).strip().lower())

    return convert


CONFIG_KEYS: tuple[ConfigKey, ...] = (
    ConfigKey("filter", None, "filter_kind", _enum(FilterKind), "gaussian or grid"),
    ConfigKey("tau_min_ns", "controller", "tau_min", _scaled(NS), "shortest sensing time (ns)"),
    ConfigKey("n_sensing_times", "controller", "n_sensing_times", _as_int, "number of sensing times N"),
    ConfigKey("g", "controller", "repetitions_base", _as_int, "repetitions G"),
    ConfigKey("f", "controller", "repetitions_step", _as_int, "repetition increment F"),
    ConfigKey("fom_threshold", "controller", "fom_threshold", _as_float, "figure-of-merit threshold"),
    ConfigKey("sensing_order", "controller", "sensing_order", _enum(SensingOrder), "ascending or descending"),
    ConfigKey("amplitude_threshold", "reduction", "amplitude_threshold", _as_float, "pruning threshold"),
    ConfigKey("kl_threshold", "reduction", "kl_threshold", _as_float, "merging threshold"),
    ConfigKey("max_components", "reduction", "max_components", _optional(_as_int), "component cap"),
    ConfigKey("overhead_us", None, "t_oh", _scaled(US), "overhead per measurement (µs)"),
    ConfigKey("t2star_us", None, "t2_star", _scaled(US), "coherence time T2* (µs, inf to disable)"),
    ConfigKey("kappa_mhz", None, "kappa", _scaled(MHZ), "diffusion (MHz·Hz^1/2)"),
    ConfigKey("total_time_ms", None, "total_time", _optional(_scaled(MS)), "run length (ms)"),
    ConfigKey("measurements", None, "measurement_budget", _optional(_as_int), "run length (measurements)"),
    ConfigKey("grid_points", None, "grid_points", _optional(_as_int), "grid bins M"),
    ConfigKey("grid_points_per_period", None, "grid_points_per_period", _as_int, "bins per shortest period"),
    ConfigKey("seed", None, "seed", _as_int, "run seed"),
    ConfigKey("fail_threshold", None, "fail_threshold", _as_float, "MSE fail threshold (MHz²)"),
    ConfigKey("f0_mhz", None, "f0", _optional(_scaled(MHZ)), "initial frequency (MHz)"),
    ConfigKey("freq_lo_mhz", None, "freq_lo", _scaled(MHZ), "lower edge of the prior range (MHz)"),
    ConfigKey("timing_warmup", None, "timing_warmup", _as_int, "measurements excluded from timing"),
    ConfigKey("mse_window", None, "mse_window", _enum(MseWindow), "tracking or all"),
)

_KEYS_BY_NAME = {key.name: key for key in CONFIG_KEYS}


def build_run_config(values: Mapping[str, Any], base: RunConfig | None = None) -> RunConfig:
    """Apply raw display-unit ``values`` on top of ``base`` (defaults when omitted).

    Setting ``measurements`` switches the budget to a measurement count unless
    ``total_time_ms`` is given as well, which is an error.
    """
    base = base or RunConfig()
    unknown = sorted(set(values) - set(_KEYS_BY_NAME))
    if unknown:
        _logger.error("Unknown config keys: %s", ", ".join(unknown))
        raise ConfigError(f"Unknown config key(s): {', '.join(unknown)}")

    top: dict[str, Any] = {}
    nested: dict[str, dict[str, Any]] = {"controller": {}, "reduction": {}}
    for name, raw in values.items():
        key = _KEYS_BY_NAME[name]
        try:
            converted = key.convert(raw)
        except (TypeError, ValueError) as exc:
            _logger.error("Invalid value for %s: %r", name, raw)
            raise ConfigError(f"Invalid value for {name!r} ({key.description}): {raw!r}") from exc
        if key.section is None:
            top[key.field] = converted
        else:
            nested[key.section][key.field] = converted

    if top.get("measurement_budget") is not None:
        if top.get("total_time") is not None:
            raise ConfigError("Set either total_time_ms or measurements, not both.")
        top["total_time"] = None
    elif top.get("total_time") is not None:
        top["measurement_budget"] = None

    try:
        controller = dataclasses.replace(base.controller, **nested["controller"])
        reduction = dataclasses.replace(base.reduction, **nested["reduction"])
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    config = base.replace(controller=controller, reduction=reduction, **top)
    _logger.debug("Built run config %s from %d keys", config.config_hash(), len(values))
    return config


def describe_keys() -> list[tuple[str, str]]:
    return [(key.name, key.description) for key in CONFIG_KEYS]
