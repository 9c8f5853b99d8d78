from .command_router import CommandRouter, CommandContext, Stage
