import logging

from src.app.bases.exceptions import AbstractErrorHandler
from src.app.bases.routing import CommandContext
from .exit_codes import EXIT_USAGE, failure_message

_logger = logging.getLogger(__name__)


@AbstractErrorHandler.as_error_handler(exception_cls=FileNotFoundError)
def file_not_found_handler(error: FileNotFoundError, context: CommandContext, **__) -> int:
    path = error.filename if error.filename is not None else str(error)
    _logger.error(failure_message(context, f"file not found: {path}"))
    return EXIT_USAGE
