from .command import cmd_train
