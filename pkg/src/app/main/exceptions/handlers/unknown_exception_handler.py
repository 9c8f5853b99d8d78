import logging

from src.app.bases.exceptions import AbstractErrorHandler
from src.app.bases.routing import CommandContext
from src.core.utils.errors import describe_error, get_traceback_text
from .exit_codes import EXIT_FAILURE, failure_message

_logger = logging.getLogger(__name__)


@AbstractErrorHandler.as_error_handler(exception_cls=Exception)
def unknown_exception_handler(error: Exception, context: CommandContext, **__) -> int:
    _logger.error(failure_message(context, f"unexpected error: {describe_error(error)}"))
    _logger.debug(get_traceback_text(error))
    return EXIT_FAILURE
