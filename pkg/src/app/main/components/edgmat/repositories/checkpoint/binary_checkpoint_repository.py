"""
Binary checkpoint format:

    b"EDGMAT1"
    uint32 little-endian header length
    header: utf-8 `key = value` lines
        format = EDGMAT1
        config.<field> = <value>             every ModelConfig field
        model.node_feature_dim = <int>
        model.edge_feature_dim = <int>
        param.<name> = <rows>x<cols>         parameter manifest, in payload order
    payloads: little-endian float32, row-major, one block per manifest entry

Serialization is canonical: saving a loaded checkpoint reproduces the file byte for byte.
"""

import logging
import struct

import numpy as np
from pydantic import ValidationError

from src.app.main.components.edgmat.entities import ModelConfig
from src.app.main.components.edgmat.exceptions import (
    CheckpointFormatError,
    CheckpointVersionError,
    CheckpointShapeError,
    CheckpointTruncatedError
)
from src.app.main.components.edgmat.services import EdgmatModel
from src.core.state import ConfigSourceError, parse_key_values
from src.core.utils.collections import format_key_values
from .abc import AbstractCheckpointRepository

_logger = logging.getLogger(__name__)

MAGIC = b"EDGMAT1"
FORMAT_NAME = MAGIC.decode("ascii")
_MAGIC_FAMILY = b"EDGMAT"
_LENGTH = struct.Struct("<I")
_PAYLOAD_DTYPE = np.dtype("<f4")


def _format_shape(shape: tuple[int, ...]) -> str:
    return "x".join(str(size) for size in shape)


def _parse_shape(path: str, name: str, raw: str) -> tuple[int, ...]:
    try:
        shape = tuple(int(size) for size in raw.split("x"))
    except ValueError as error:
        raise CheckpointShapeError(path, name, f"malformed shape '{raw}'") from error

    if any(size < 0 for size in shape):
        raise CheckpointShapeError(path, name, f"negative size in shape '{raw}'")

    return shape


class BinaryCheckpointRepository(AbstractCheckpointRepository):
    def render_header(self, model: EdgmatModel) -> dict[str, object]:
        header: dict[str, object] = {"format": FORMAT_NAME}
        header.update(model.config.to_key_values(prefix="config."))
        header["model.node_feature_dim"] = model.node_feature_dim
        header["model.edge_feature_dim"] = model.edge_feature_dim

        for name, param in model.named_parameters():
            header[f"param.{name}"] = _format_shape(param.shape)

        return header

    def dumps(self, model: EdgmatModel) -> bytes:
        header = format_key_values(self.render_header(model)).encode("utf-8")
        payload = b"".join(np.asarray(param.data, dtype=_PAYLOAD_DTYPE).tobytes() for param in model.parameters())
        return MAGIC + _LENGTH.pack(len(header)) + header + payload

    def save(self, model: EdgmatModel, path: str) -> None:
        data = self.dumps(model)

        with open(path, "wb") as file:
            file.write(data)

        _logger.info(f"Checkpoint saved to {path} ({len(data)} bytes)")

    def _read_header(self, data: bytes, path: str) -> tuple[dict[str, str], int]:
        if len(data) < len(MAGIC) and MAGIC.startswith(data) and data:
            raise CheckpointTruncatedError(path, "file ends inside the magic string")

        magic = data[:len(MAGIC)]

        if magic != MAGIC:
            if magic.startswith(_MAGIC_FAMILY):
                raise CheckpointVersionError(path, f"unsupported format {magic.decode('ascii', 'replace')!r}, expected {FORMAT_NAME!r}")

            raise CheckpointFormatError(path, "not a checkpoint (bad magic string)")

        start = len(MAGIC) + _LENGTH.size

        if len(data) < start:
            raise CheckpointTruncatedError(path, "file ends inside the header length")

        (header_length,) = _LENGTH.unpack_from(data, len(MAGIC))

        if len(data) < start + header_length:
            raise CheckpointTruncatedError(path, f"header needs {header_length} bytes, {len(data) - start} present")

        try:
            text = data[start:start + header_length].decode("utf-8")
            header = parse_key_values(text.splitlines(), path, normalize_keys=False)
        except (UnicodeDecodeError, ConfigSourceError) as error:
            raise CheckpointFormatError(path, f"unreadable header ({error})") from error

        if header.get("format") != FORMAT_NAME:
            raise CheckpointVersionError(path, f"header format {header.get('format')!r}, expected {FORMAT_NAME!r}")

        return header, start + header_length

    def _build_model(self, header: dict[str, str], path: str) -> EdgmatModel:
        config_fields = {key.removeprefix("config."): value for key, value in header.items() if key.startswith("config.")}

        try:
            config = ModelConfig.model_validate(config_fields)
            node_dim = int(header["model.node_feature_dim"])
            edge_dim = int(header["model.edge_feature_dim"])
        except KeyError as error:
            raise CheckpointFormatError(path, f"header misses {error.args[0]!r}") from error
        except (ValidationError, ValueError) as error:
            raise CheckpointFormatError(path, f"invalid model description ({error})") from error

        return EdgmatModel(config, node_dim, edge_dim)

    def loads(self, data: bytes, path: str = "<memory>") -> EdgmatModel:
        """
        :raises:
            :raise CheckpointFormatError: Bad magic, unreadable header or trailing bytes
            :raise CheckpointVersionError: Another EDGMAT format version
            :raise CheckpointShapeError: Manifest disagrees with the shapes implied by the config
            :raise CheckpointTruncatedError: File shorter than its header announces
        """

        header, offset = self._read_header(data, path)
        model = self._build_model(header, path)

        manifest = {key.removeprefix("param."): value for key, value in header.items() if key.startswith("param.")}
        expected = model.named_parameters()
        known = {name for name, _ in expected}

        for name in manifest:
            if name not in known:
                raise CheckpointShapeError(path, name, "not a parameter of the described model")

        blocks = []

        for name, param in expected:
            if name not in manifest:
                raise CheckpointShapeError(path, name, "missing from the manifest")

            shape = _parse_shape(path, name, manifest[name])

            if shape != param.shape:
                raise CheckpointShapeError(path, name, f"shape {_format_shape(shape)}, expected {_format_shape(param.shape)}")

            blocks.append(param)

        needed = sum(param.data.size for param in blocks) * _PAYLOAD_DTYPE.itemsize
        available = len(data) - offset

        if available < needed:
            raise CheckpointTruncatedError(path, f"payload needs {needed} bytes, {available} present")

        if available > needed:
            raise CheckpointFormatError(path, f"{available - needed} unexpected trailing bytes")

        for param in blocks:
            count = param.data.size
            values = np.frombuffer(data, dtype=_PAYLOAD_DTYPE, count=count, offset=offset)
            param.data = values.astype(np.float64).reshape(param.shape)
            offset += count * _PAYLOAD_DTYPE.itemsize

        return model

    def load(self, path: str) -> EdgmatModel:
        with open(path, "rb") as file:
            data = file.read()

        model = self.loads(data, path)
        _logger.info(f"Checkpoint loaded from {path}")
        return model


def save_checkpoint(model: EdgmatModel, path: str) -> None:
    BinaryCheckpointRepository().save(model, path)


def load_checkpoint(path: str) -> EdgmatModel:
    return BinaryCheckpointRepository().load(path)
