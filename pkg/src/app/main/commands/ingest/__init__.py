from .command import cmd_ingest
