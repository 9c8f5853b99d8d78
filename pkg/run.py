import sys
from typing import Sequence

from args import parse_args
from settings_setup import setup_settings
from setup import setup_loggers
from src.app.main.commands import command_router, RunConfig


def main(argv: Sequence[str] | None = None) -> int:
    cmd_args = parse_args(argv)

    # Logger initialization
    _logger = setup_loggers(cmd_args.log_file)
    _logger.debug(f"Running command {cmd_args.command}")

    return command_router.dispatch(
        cmd_args.command,
        lambda: RunConfig.from_settings(setup_settings(cmd_args))
    )


if __name__ == "__main__":
    sys.exit(main())
