import logging

from src.app.bases.exceptions import AbstractErrorHandler
from src.app.bases.routing import CommandContext
from src.core.exceptions import ConfigurationError
from .exit_codes import EXIT_USAGE, failure_message

_logger = logging.getLogger(__name__)


@AbstractErrorHandler.as_error_handler(exception_cls=ConfigurationError)
def configuration_error_handler(error: ConfigurationError, context: CommandContext, **__) -> int:
    _logger.error(failure_message(context, str(error)))
    return EXIT_USAGE
