import argparse

from args import overrides
from src.core.state import ProjectSettings, PyModuleConfig, JsonFileConfig, KeyValueFileConfig, MappingConfig


def setup_settings(cmd_args: argparse.Namespace, settings: ProjectSettings | None = None) -> ProjectSettings:
    settings = settings if settings is not None else ProjectSettings()
    settings.register_config(PyModuleConfig('src.config'))  # Must be first

    config_path = getattr(cmd_args, 'config', None)

    if config_path is not None:
        if config_path.lower().endswith('.json'):
            settings.register_config(JsonFileConfig(config_path))
        else:
            settings.register_config(KeyValueFileConfig(config_path))

    settings.register_config(MappingConfig(overrides(cmd_args)))  # Flags win
    return settings
