from .base import BaseApplicationError


class ConfigurationError(BaseApplicationError):
    """
    A required setting is absent or a config source cannot be used.
    """


class NotFoundError(BaseApplicationError):
    pass


class BadVersionError(BaseApplicationError):
    pass


class IllegalArgumentError(BaseApplicationError, ValueError):
    """
    An argument is outside the domain of the operation (negative slope, fraction not in (0, 1], ...).
    """
