from .defaults import DEFAULT_LATNAK_TOML
from .loader import ConfigLoader, load_config
from .schema import FieldConfig, LimitsConfig, OutputConfig, RunConfig, RunSettings

__all__ = [
    "FieldConfig",
    "LimitsConfig",
    "OutputConfig",
    "RunSettings",
    "RunConfig",
    "ConfigLoader",
    "load_config",
    "DEFAULT_LATNAK_TOML",
]
