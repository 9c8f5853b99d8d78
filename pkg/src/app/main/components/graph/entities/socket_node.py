from src.app.bases.schemas import BaseSchema
from src.app.main.components.ingest.entities import SocketKey


class SocketNode(BaseSchema):
    key: SocketKey
    index: int
    h0: tuple[float, ...]

    @property
    def ip(self) -> str:
        return self.key[0]

    @property
    def port(self) -> int:
        return self.key[1]
