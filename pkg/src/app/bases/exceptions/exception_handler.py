from abc import ABC, abstractmethod
from functools import wraps
from typing import TYPE_CHECKING, Callable, Generic, TypeVar

from typing_extensions import Self

if TYPE_CHECKING:
    from src.app.bases.routing import CommandContext

_errorT = TypeVar('_errorT', bound=Exception)
_T = TypeVar('_T', bound=Exception)


class AbstractErrorHandler(ABC, Generic[_errorT]):
    """
    An abstract base class for command error handlers: each maps one exception class to a process exit status.
    """

    @classmethod
    def as_error_handler(cls, exception_cls: type[_T], **init_kwargs) -> Callable:
        """
        Decorator that creates a custom error handler based on the given exception class.

        :param exception_cls: `type[_T]`
            The class of the exception this handler will manage.

        :param init_kwargs: `dict`
            Additional initialization arguments for the handler class.

        :return: `Callable`
            A decorator turning a plain function `(error, context) -> int` into a handler instance.
        """

        def decorator(func) -> Self:
            @wraps(func)
            def wrapper(handler_self: 'AbstractErrorHandler', *args, **kwargs) -> int:
                return func(*args, **kwargs, handler=handler_self)

            handler = type(func.__name__, (cls,), {
                '__exception_cls__': exception_cls,
                'handle': wrapper
            })

            return handler(**init_kwargs)

        return decorator

    @property
    @abstractmethod
    def __exception_cls__(self) -> type[_errorT]:
        """
        Abstract property that must return the exception class this handler is responsible for.

        :return: `type[_errorT]`
            The class of the exception this handler will manage.
        """

    @abstractmethod
    def handle(self, error: _errorT, context: 'CommandContext') -> int:
        """
        Abstract method to handle an exception.

        :param error: `_errorT`
            The exception to handle.

        :param context: `CommandContext`
            Command and stage that failed.

        :return: `int`
            Exit status of the process.
        """

    def __call__(self, *args, **kwargs) -> int:
        return self.handle(*args, **kwargs)
