from .command import cmd_evaluate
