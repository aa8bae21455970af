"""Run configuration: flat key=value files merged with CLI flag overrides.

Config files are UTF-8 text with one ``key = value`` assignment per line and
``#`` comments.  CLI flags override file values, which override built-in
defaults.  All numeric fields are validated before any computation starts, so
an invalid configuration never produces partial output.
"""

from __future__ import annotations

from pathlib import Path


class ConfigError(Exception):
    """Invalid or inconsistent run configuration (CLI exit code 2)."""


def read_config_file(path: str | Path) -> dict[str, str]:
    """Parse a flat key=value config file into a string dict."""
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"config file not found: {path}")
    out: dict[str, str] = {}
    for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
        key, value = line.split("=", 1)
        key = key.strip()
        if not key:
            raise ConfigError(f"{path}:{lineno}: empty key")
        out[key] = value.strip()
    return out


class Settings:
    """Layered string settings with typed, validated accessors."""

    def __init__(self, defaults: dict, file_values: dict, flag_values: dict):
        self._values: dict[str, str] = {k: str(v) for k, v in defaults.items()}
        self._known = set(defaults)
        unknown = set(file_values) - self._known
        if unknown:
            raise ConfigError(
                f"unknown config keys: {', '.join(sorted(unknown))} "
                f"(known: {', '.join(sorted(self._known))})"
            )
        self._values.update({k: str(v) for k, v in file_values.items()})
        self._values.update(
            {k: str(v) for k, v in flag_values.items() if v is not None}
        )

    def raw(self, key: str) -> str:
        return self._values[key]

    def get_int(self, key: str, minimum: int | None = None) -> int:
        try:
            value = int(self._values[key])
        except ValueError:
            raise ConfigError(f"{key} must be an integer, got {self._values[key]!r}")
        if minimum is not None and value < minimum:
            raise ConfigError(f"{key} must be >= {minimum}, got {value}")
        return value

    def get_float(
        self,
        key: str,
        minimum: float | None = None,
        maximum: float | None = None,
        exclusive_min: bool = False,
    ) -> float:
        try:
            value = float(self._values[key])
        except ValueError:
            raise ConfigError(f"{key} must be a number, got {self._values[key]!r}")
        if minimum is not None:
            if exclusive_min and value <= minimum:
                raise ConfigError(f"{key} must be > {minimum}, got {value}")
            if not exclusive_min and value < minimum:
                raise ConfigError(f"{key} must be >= {minimum}, got {value}")
        if maximum is not None and value > maximum:
            raise ConfigError(f"{key} must be <= {maximum}, got {value}")
        return value

    def get_bool(self, key: str) -> bool:
        value = self._values[key].lower()
        if value in ("true", "1", "yes", "on"):
            return True
        if value in ("false", "0", "no", "off"):
            return False
        raise ConfigError(f"{key} must be a boolean, got {self._values[key]!r}")

    def get_int_list(self, key: str, minimum: int | None = None) -> list[int]:
        items = [p for p in self._values[key].replace(" ", "").split(",") if p]
        if not items:
            raise ConfigError(f"{key} must be a non-empty comma list of integers")
        try:
            values = [int(p) for p in items]
        except ValueError:
            raise ConfigError(f"{key} must list integers, got {self._values[key]!r}")
        if minimum is not None and any(v < minimum for v in values):
            raise ConfigError(f"every entry of {key} must be >= {minimum}")
        return values

    def get_choice(self, key: str, choices: tuple[str, ...]) -> str:
        value = self._values[key]
        if value not in choices:
            raise ConfigError(f"{key} must be one of {choices}, got {value!r}")
        return value
