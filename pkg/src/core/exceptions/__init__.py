from .base import BaseApplicationError
from .generics import (
    ConfigurationError,
    NotFoundError,
    BadVersionError,
    IllegalArgumentError
)
