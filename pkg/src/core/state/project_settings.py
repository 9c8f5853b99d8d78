from typing import Any, Iterable

from src.core.utils.types import MISSING
from .config import AbstractConfig, normalize_key


class ProjectSettings:
    """
    Layered project settings.

    Sources are registered in priority order: each `register_config` call overrides keys
    loaded by earlier ones (module defaults, then the run config file, then command-line flags).
    Keys are looked up in UPPER_SNAKE_CASE.
    """

    def __init__(self) -> None:
        self._config_data: dict[str, Any] = {}
        self._sources: list[str] = []

    def __getattr__(self, item: str) -> Any:
        """
        Fetches a value from the merged configuration.

        :param item: `str`
            The attribute name.

        :return: `Any`
            The fetched value.

        :raises:
            :raise AttributeError: If the attribute is not found in any of the registered configurations.
        """

        try:
            return self._config_data[normalize_key(item)]
        except KeyError as error:
            raise AttributeError(f"Project config has no value for key '{item}'") from error

    def __setattr__(self, key: str, value: Any) -> None:
        if key.startswith("_"):
            return super().__setattr__(key, value)

        self._config_data[normalize_key(key)] = value

    def __contains__(self, key: str) -> bool:
        return normalize_key(key) in self._config_data

    def get(self, key: str, default: Any = MISSING) -> Any:
        """
        Returns the value for `key` if it exists, otherwise `default`

        :param key: `str`
            Attribute name

        :param default: `Any`
            (Optional) Default value that must be returned if key does not exist.
            By default, MISSING

        :return: `Any`
            Value of attribute or default
        """

        return self._config_data.get(normalize_key(key), default)

    def register_config(self, config: AbstractConfig) -> None:
        """
        Loads a source and merges it over the current values

        :param config: `AbstractConfig`
            The configuration instance.
        """

        self._config_data.update(config.load())
        self._sources.append(type(config).__name__)

    def extract(self, keys: Iterable[str]) -> dict[str, Any]:
        """
        Returns the subset of settings named by `keys`, keyed by the lower-case field name.
        Missing keys are left out so the consumer's defaults apply.

        :param keys: `Iterable[str]`
            Field names (any case)

        :return: `dict[str, Any]`
            Field name to value
        """

        extracted = {}

        for key in keys:
            value = self.get(key)

            if value is not MISSING:
                extracted[key.lower()] = value

        return extracted

    @property
    def sources(self) -> tuple[str, ...]:
        return tuple(self._sources)
