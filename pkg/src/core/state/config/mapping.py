from typing import Any, Mapping

from src.core.state.config.abc import AbstractConfig, normalize_key


class MappingConfig(AbstractConfig):
    """
    In-memory configuration (command-line overrides). `None` values are skipped,
    so flags that were not given never shadow file values.
    """

    def __init__(self, values: Mapping[str, Any]) -> None:
        self._values = dict(values)

    def load(self) -> dict[str, Any]:
        return {normalize_key(key): value for key, value in self._values.items() if value is not None}
