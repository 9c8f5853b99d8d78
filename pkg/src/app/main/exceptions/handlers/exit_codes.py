from src.app.bases.routing import CommandContext

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def failure_message(context: CommandContext, detail: str) -> str:
    stage = context.stage if context.stage is not None else "startup"
    return f"{context.command} failed at stage {stage}: {detail}"
