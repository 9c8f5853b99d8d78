from abc import ABC, abstractmethod
from typing import Sequence

from src.app.main.components.ingest.entities import DatasetSchema, FlowRecord


class AbstractFlowRepository(ABC):
    @abstractmethod
    def read(self, path: str, schema: DatasetSchema) -> list[FlowRecord]:
        ...

    @abstractmethod
    def write_encoded(self, records: Sequence[FlowRecord], schema: DatasetSchema, path: str) -> None:
        ...
