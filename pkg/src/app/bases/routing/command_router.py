import logging
import time
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Callable, Generator, Generic, Iterable, TypeVar

from src.app.bases.exceptions import AbstractErrorHandler
from src.core.exceptions import NotFoundError

_logger = logging.getLogger(__name__)

_configT = TypeVar('_configT')

CommandFn = Callable[[_configT], int | None]


@dataclass(frozen=True)
class Stage:
    """
    Pipeline step a command is executing and the input (usually a path) it works on.
    """

    name: str
    source: str | None = None

    def __str__(self) -> str:
        return self.name if self.source is None else f"{self.name} ({self.source})"


@dataclass(frozen=True)
class CommandContext:
    command: str
    stage: Stage | None


class CommandRouter(Generic[_configT]):
    """
    Registry of CLI commands plus the error dispatch around them.

    Commands register with `@router.command("name")` and receive the validated run
    configuration. While a command runs, `router.stage(...)` marks the pipeline step;
    when the command raises, the stage still names the failing step and the first
    handler whose exception class matches turns the error into an exit status.
    """

    def __init__(self, handlers: Iterable[AbstractErrorHandler] = ()) -> None:
        self._commands: dict[str, CommandFn[_configT]] = {}
        self._handlers: list[AbstractErrorHandler] = list(handlers)
        self._stage: Stage | None = None

    @property
    def commands(self) -> tuple[str, ...]:
        return tuple(self._commands)

    @property
    def current_stage(self) -> Stage | None:
        return self._stage

    def command(self, name: str) -> Callable[[CommandFn[_configT]], CommandFn[_configT]]:
        def decorator(func: CommandFn[_configT]) -> CommandFn[_configT]:
            self._commands[name] = func
            return func

        return decorator

    def add_error_handlers(self, handlers: Iterable[AbstractErrorHandler]) -> None:
        self._handlers.extend(handlers)

    @contextmanager
    def stage(self, name: str, source: str | None = None) -> Generator[Stage, None, None]:
        """
        Marks a pipeline step. The previous stage is restored only on normal exit,
        so an escaping exception leaves the failing stage visible to the handlers.
        """

        previous = self._stage
        self._stage = Stage(name, source)
        started = time.perf_counter()
        _logger.debug(f"Stage {self._stage} started")

        yield self._stage

        _logger.debug(f"Stage {self._stage} finished in {time.perf_counter() - started:.3f}s")
        self._stage = previous

    def dispatch(self, name: str, config_factory: Callable[[], _configT]) -> int:
        """
        Builds the configuration and runs the command named `name`.

        :param name: `str`
            Registered command name

        :param config_factory: `Callable[[], _configT]`
            Loads and validates the run configuration (errors are handled like command errors)

        :return: `int`
            Process exit status
        """

        self._stage = None

        try:
            if name not in self._commands:
                raise NotFoundError(f"unknown command '{name}', expected one of {', '.join(self._commands)}")

            with self.stage("config"):
                config = config_factory()

            return self._commands[name](config) or 0
        except Exception as error:
            return self.handle_error(error, CommandContext(command=name, stage=self._stage))

    def handle_error(self, error: Exception, context: CommandContext) -> int:
        for handler in self._handlers:
            if isinstance(error, handler.__exception_cls__):
                return handler(error, context)

        raise error
