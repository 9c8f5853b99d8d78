from abc import ABC, abstractmethod

from src.app.main.components.edgmat.services import EdgmatModel


class AbstractCheckpointRepository(ABC):
    @abstractmethod
    def save(self, model: EdgmatModel, path: str) -> None:
        """Persist the model configuration and parameters"""

    @abstractmethod
    def load(self, path: str) -> EdgmatModel:
        """Restore a model saved by `save`"""
