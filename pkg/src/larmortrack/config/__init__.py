from larmortrack.config.builder import CONFIG_KEYS, ConfigKey, build_run_config, describe_keys
from larmortrack.config.parser import load_config, parse_key_value_text, parse_yaml_text
from larmortrack.config.run_config import MseWindow, RunConfig

__all__ = [
    "CONFIG_KEYS",
    "ConfigKey",
    "MseWindow",
    "RunConfig",
    "build_run_config",
    "describe_keys",
    "load_config",
    "parse_key_value_text",
    "parse_yaml_text",
]
