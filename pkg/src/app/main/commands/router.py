from src.app.bases.routing import CommandRouter
from src.app.main.exceptions.handlers import __handlers__
from .schemas import RunConfig

command_router = CommandRouter[RunConfig](__handlers__)
