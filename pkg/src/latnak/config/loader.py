import sys
from pathlib import Path
from typing import Any

if sys.version_info < (3, 11):
    import tomli as tomllib
else:
    import tomllib

from latnak.config.schema import FieldConfig, LimitsConfig, OutputConfig, RunConfig, RunSettings
from latnak.constants import CONFIG_FILENAME, DEFAULT_PRIME, FIELD_KINDS, ISO_CAP, MAX_DIM, OUTPUT_FORMATS
from latnak.exceptions import ConfigError

VERBOSITY_LEVELS = ("minimal", "normal", "verbose")

COLOR_MODES = ("auto", "always", "never")


class ConfigLoader:
    """
    Loader for latnak configuration from latnak.toml
    """

    @staticmethod
    def load(config_path: Path | str | None = None) -> RunConfig:
        """
        Load configuration from latnak.toml

        Args:
            config_path (Path | str | None): Path to latnak.toml. If None, searches upwards from the
                current directory and falls back to the defaults when nothing is found.

        Returns:
            RunConfig: RunConfig instance

        Raises:
            ConfigError: If an explicitly named file is missing or any file fails to parse
        """

        if config_path is None:
            found = ConfigLoader.find_config()
            if found is None:
                return RunConfig()
            config_path = found
        else:
            config_path = Path(config_path)

        if not config_path.exists():
            raise ConfigError(f"Configuration file not found: {config_path}")

        try:
            with open(config_path, "rb") as f:
                data = tomllib.load(f)
        except Exception as e:
            raise ConfigError(f"Failed to parse {config_path}: {str(e)}") from e

        return ConfigLoader.parse_config(data)

    @staticmethod
    def find_config(start_dir: Path | None = None) -> Path | None:
        """
        Find latnak.toml by searching up the directory tree

        Args:
            start_dir (Path | None): Directory to start search from. Defaults to cwd.

        Returns:
            Path | None: The path to latnak.toml, None when no directory up to the root has one
        """

        if start_dir is None:
            start_dir = Path.cwd()
        else:
            start_dir = Path(start_dir)

        current = start_dir.resolve()

        while True:
            config_path = current / CONFIG_FILENAME
            if config_path.exists():
                return config_path

            parent = current.parent
            if parent == current:
                return None
            current = parent

    @staticmethod
    def parse_config(data: dict[str, Any]) -> RunConfig:
        """
        Build a RunConfig from parsed TOML, validating the enumerated values

        Raises:
            ConfigError: If a value is out of range
        """

        field_data = data.get("field", {})
        field = FieldConfig(
            kind=field_data.get("kind", "rationals"),
            prime=field_data.get("prime", DEFAULT_PRIME),
        )
        _check_choice("field.kind", field.kind, FIELD_KINDS)

        limits_data = data.get("limits", {})
        limits = LimitsConfig(
            max_dim=limits_data.get("max_dim", MAX_DIM),
            iso_cap=limits_data.get("iso_cap", ISO_CAP),
            max_sample=limits_data.get("max_sample", 50),
        )
        for name in ("max_dim", "iso_cap", "max_sample"):
            value = getattr(limits, name)
            if not isinstance(value, int) or value < 1:
                raise ConfigError(f"limits.{name} must be a positive integer, got {value!r}")

        output_data = data.get("output", {})
        output = OutputConfig(
            format=output_data.get("format", "text"),
            verbosity=output_data.get("verbosity", "normal"),
            color=output_data.get("color", "auto"),
        )
        _check_choice("output.format", output.format, OUTPUT_FORMATS)
        _check_choice("output.verbosity", output.verbosity, VERBOSITY_LEVELS)
        _check_choice("output.color", output.color, COLOR_MODES)

        run_data = data.get("run", {})
        run = RunSettings(
            seed=run_data.get("seed", 0),
            verify=run_data.get("verify", True),
            workers=run_data.get("workers", 4),
        )
        if not isinstance(run.workers, int) or run.workers < 1:
            raise ConfigError(f"run.workers must be a positive integer, got {run.workers!r}")

        config = RunConfig(limits=limits, output=output, run=run, field=field)
        # rejects a bad prime early
        config.domain()
        return config


def _check_choice(name: str, value: object, choices: tuple[str, ...]) -> None:
    if value not in choices:
        raise ConfigError(f"Invalid {name} '{value}'. Use one of: {', '.join(choices)}")


def load_config(config_path: Path | str | None = None) -> RunConfig:
    """
    Load latnak configuration from latnak.toml

    Args:
        config_path (Path | str | None): Path to latnak.toml. If None, searches current directory.

    Returns:
        RunConfig: The loaded configuration
    """

    return ConfigLoader.load(config_path)
