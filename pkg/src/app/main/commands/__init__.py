from .router import command_router
from .schemas import RunConfig
from .ingest import cmd_ingest
from .train import cmd_train
from .evaluate import cmd_evaluate
from .export_embeddings import cmd_export_embeddings
from .gradcheck import cmd_gradcheck
