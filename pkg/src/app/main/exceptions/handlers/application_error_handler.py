import logging

from src.app.bases.exceptions import AbstractErrorHandler
from src.app.bases.routing import CommandContext
from src.core.exceptions import BaseApplicationError
from src.core.utils.errors import describe_error
from .exit_codes import EXIT_FAILURE, failure_message

_logger = logging.getLogger(__name__)


@AbstractErrorHandler.as_error_handler(exception_cls=BaseApplicationError)
def application_error_handler(error: BaseApplicationError, context: CommandContext, **__) -> int:
    _logger.error(failure_message(context, describe_error(error)))
    return EXIT_FAILURE
