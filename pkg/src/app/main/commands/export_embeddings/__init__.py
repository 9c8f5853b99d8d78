from .command import cmd_export_embeddings
