from .abc import AbstractConfig, normalize_key
from .json import JsonFileConfig
from .key_value import KeyValueFileConfig, parse_key_values
from .mapping import MappingConfig
from .py_module_config import PyModuleConfig
