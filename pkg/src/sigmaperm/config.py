"""Configuration management for sigmaperm.

All desk-scale caps and sampling counts live in one :class:`Config` record that
is threaded through the toolbox, the checkers and the oracles.
"""

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from dataclasses import asdict, dataclass, replace
from pathlib import Path
from typing import Any, Optional

from platformdirs import user_config_dir


APP_NAME = "sigmaperm"


@dataclass(frozen=True)
class Config:
    """Caps and sampling parameters for the desk-scale algorithms."""

    # Limits
    index_cap: int = 10**6  # cosets in a core computation
    enum_cap: int = 10**5  # elements enumerated by Sylow/intersection
    quotient_scan_cap: int = 10**5  # exact chief-series scan bound

    # Sampling
    sample_count: int = 10**4
    recheck_count: int = 100
    sylow_retries: int = 5000
    seed: int = 0

    # Oracle
    lattice_cap: int = 200
    oracle_cap: int = 2000

    def with_overrides(self, **overrides: Optional[int]) -> "Config":
        """Return a copy with every non-None override applied."""
        changes = {key: value for key, value in overrides.items() if value is not None}
        return replace(self, **changes)


DEFAULT_CONFIG = Config()

# TOML table each field is stored under
_SECTIONS: dict[str, tuple[str, ...]] = {
    "limits": ("index_cap", "enum_cap", "quotient_scan_cap"),
    "sampling": ("sample_count", "recheck_count", "sylow_retries", "seed"),
    "oracle": ("lattice_cap", "oracle_cap"),
}


def get_config_dir() -> Path:
    """Get the configuration directory path.

    Returns ~/.config/sigmaperm/ on Linux, %APPDATA%/sigmaperm/ on Windows.
    """
    return Path(user_config_dir(APP_NAME))


def get_config_path() -> Path:
    """Get the full path to the config file."""
    return get_config_dir() / "config.toml"


def config_exists() -> bool:
    """Check if the configuration file exists."""
    return get_config_path().exists()


def resolve_config(config: Optional[Config]) -> Config:
    """Return ``config`` or the defaults when it is None."""
    return config if config is not None else DEFAULT_CONFIG


def load_config(path: Optional[Path] = None) -> Config:
    """Load configuration from a TOML file.

    A missing file yields the defaults; tables and keys that are absent keep
    their default values.

    Raises:
        ValueError: If a value is not a positive integer (seed may be zero)
    """
    config_path = path if path is not None else get_config_path()
    if not config_path.exists():
        return DEFAULT_CONFIG

    with open(config_path, "rb") as f:
        data = tomllib.load(f)

    values: dict[str, Any] = {}
    for section, keys in _SECTIONS.items():
        table = data.get(section, {})
        if not isinstance(table, dict):
            raise ValueError(f"Invalid config file: [{section}] must be a table")
        for key in keys:
            if key not in table:
                continue
            value = table[key]
            if not isinstance(value, int) or isinstance(value, bool):
                raise ValueError(f"Invalid config value {section}.{key}: {value!r}")
            if value < 0 or (value == 0 and key != "seed"):
                raise ValueError(f"{section}.{key} must be positive, got {value}")
            values[key] = value

    return replace(DEFAULT_CONFIG, **values)


def save_config(config: Config, path: Optional[Path] = None) -> Path:
    """Save configuration to a TOML file.

    Creates the config directory if it doesn't exist.
    """
    config_path = path if path is not None else get_config_path()
    config_path.parent.mkdir(parents=True, exist_ok=True)

    values = asdict(config)
    lines: list[str] = []
    for section, keys in _SECTIONS.items():
        lines.append(f"[{section}]")
        lines.extend(f"{key} = {values[key]}" for key in keys)
        lines.append("")

    config_path.write_text("\n".join(lines))
    return config_path


def config_items(config: Config) -> list[tuple[str, str, int]]:
    """List (section, key, value) triples in file order, for display."""
    values = asdict(config)
    return [
        (section, key, values[key])
        for section, keys in _SECTIONS.items()
        for key in keys
    ]
