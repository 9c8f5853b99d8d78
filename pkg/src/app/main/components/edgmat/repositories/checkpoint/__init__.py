from .abc import AbstractCheckpointRepository
from .binary_checkpoint_repository import BinaryCheckpointRepository, save_checkpoint, load_checkpoint, MAGIC
