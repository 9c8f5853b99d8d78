import math

from typing_extensions import TypeAlias

from pydantic import Field, field_validator

from src.app.bases.schemas import BaseSchema

SocketKey: TypeAlias = tuple[str, int]


class FlowRecord(BaseSchema):
    """
    One NetFlow row after encoding. The socket 4-tuple only defines topology;
    `features` holds every other encoded field of the row.
    """

    src_ip: str
    src_port: int = Field(ge=0, le=65535)
    dst_ip: str
    dst_port: int = Field(ge=0, le=65535)
    features: tuple[float, ...]
    label: int = Field(ge=0)
    row_index: int = Field(ge=0)

    # noinspection PyNestedDecorators
    @field_validator("features")
    @classmethod
    def _check_finite(cls, value: tuple[float, ...]) -> tuple[float, ...]:
        if not all(math.isfinite(item) for item in value):
            raise ValueError("features must be finite")

        return value

    @property
    def source(self) -> SocketKey:
        return self.src_ip, self.src_port

    @property
    def destination(self) -> SocketKey:
        return self.dst_ip, self.dst_port
