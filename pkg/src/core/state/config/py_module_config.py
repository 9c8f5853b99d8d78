from importlib import import_module
from typing import Any

from src.core.state.config.abc import AbstractConfig


class PyModuleConfig(AbstractConfig):
    """
    Configuration taken from the UPPER_CASE globals of a Python module (project defaults).
    """

    def __init__(self, settings_module: str) -> None:
        """
        :param settings_module: `str`
            Dotted name of the Python module containing the settings.
        """

        self._settings_module_path = settings_module

    def load(self) -> dict[str, Any]:
        """
        Imports the settings module and collects its public UPPER_CASE names.

        :return: `dict[str, Any]`
            Setting name to value
        """

        module_vars = vars(import_module(self._settings_module_path))
        return {key: value for key, value in module_vars.items() if key.isupper() and not key.startswith("_")}
