from .command import cmd_gradcheck
