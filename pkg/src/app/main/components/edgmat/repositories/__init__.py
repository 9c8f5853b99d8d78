from .checkpoint import (
    AbstractCheckpointRepository,
    BinaryCheckpointRepository,
    save_checkpoint,
    load_checkpoint
)
from .trace import CsvTraceRepository, TRACE_COLUMNS
