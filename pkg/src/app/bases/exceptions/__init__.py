from .exception_handler import AbstractErrorHandler
