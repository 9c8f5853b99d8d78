import logging

from pydantic import ValidationError

from src.app.bases.exceptions import AbstractErrorHandler
from src.app.bases.routing import CommandContext
from .exit_codes import EXIT_USAGE, failure_message

_logger = logging.getLogger(__name__)


@AbstractErrorHandler.as_error_handler(exception_cls=ValidationError)
def validation_error_handler(error: ValidationError, context: CommandContext, **__) -> int:
    problems = "; ".join(
        f"{'.'.join(str(part) for part in problem['loc']) or '<root>'}: {problem['msg']}"
        for problem in error.errors()
    )
    _logger.error(failure_message(context, f"invalid configuration ({problems})"))
    return EXIT_USAGE
