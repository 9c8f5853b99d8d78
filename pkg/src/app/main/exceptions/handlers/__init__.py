from .application_error_handler import application_error_handler
from .configuration_error_handler import configuration_error_handler
from .exit_codes import EXIT_OK, EXIT_FAILURE, EXIT_USAGE, failure_message
from .file_not_found_handler import file_not_found_handler
from .unknown_exception_handler import unknown_exception_handler
from .validation_error_handler import validation_error_handler

# Order matters: the first handler whose exception class matches wins
__handlers__ = [
    file_not_found_handler,
    validation_error_handler,
    configuration_error_handler,
    application_error_handler,
    unknown_exception_handler
]
