import logging
import os
from typing import Sequence

import numpy as np
import pandas as pd

from src.app.main.components.ingest.entities import DatasetSchema, FlowRecord
from src.app.main.components.ingest.exceptions import SchemaError, RowParseError, LabelError
from src.core.utils.types import FloatArray, IntArray
from .abc import AbstractFlowRepository

_logger = logging.getLogger(__name__)


class CsvFlowRepository(AbstractFlowRepository):
    """
    NetFlow CSV reader: comma-separated, header row, UTF-8, RFC 4180 quoting.

    Cells are read as text and encoded column by column; error row numbers are 1-based
    data-row ordinals (the header is not counted).
    """

    def __init__(self, encoding: str = "utf-8") -> None:
        self._encoding = encoding

    def read(self, path: str, schema: DatasetSchema) -> list[FlowRecord]:
        if not os.path.isfile(path):
            raise FileNotFoundError(path)

        try:
            frame = pd.read_csv(path, dtype=str, keep_default_na=False, na_filter=False, encoding=self._encoding)
        except pd.errors.EmptyDataError as error:
            raise SchemaError(f"{path} has no header row") from error

        frame.columns = [str(column).strip() for column in frame.columns]

        for column in schema.required_columns:
            if column not in frame.columns:
                raise SchemaError(f"missing from the header of {path}", column=column)

        if frame.empty:
            _logger.info(f"{path}: no data rows")
            return []

        features = self._encode_features(frame, schema)
        labels = self._encode_labels(frame, schema)
        src_ip, src_port, dst_ip, dst_port = schema.identifier_columns
        src_ports = self._parse_ports(frame, src_port)
        dst_ports = self._parse_ports(frame, dst_port)
        src_ips = frame[src_ip].str.strip().tolist()
        dst_ips = frame[dst_ip].str.strip().tolist()

        records = [
            FlowRecord(
                src_ip=src_ips[row],
                src_port=int(src_ports[row]),
                dst_ip=dst_ips[row],
                dst_port=int(dst_ports[row]),
                features=tuple(features[row].tolist()),
                label=int(labels[row]),
                row_index=row
            )
            for row in range(len(frame))
        ]

        _logger.info(f"Parsed {len(records)} flows from {path} (feature dimension {schema.feature_dim})")
        return records

    def write_encoded(self, records: Sequence[FlowRecord], schema: DatasetSchema, path: str) -> None:
        """
        Writes the encoded feature matrix (debugging aid): `row_index, label, <feature names...>`.
        """

        matrix = np.array([record.features for record in records], dtype=np.float64).reshape(len(records), schema.feature_dim)
        frame = pd.DataFrame(matrix, columns=list(schema.feature_names))
        frame.insert(0, "label", [record.label for record in records])
        frame.insert(0, "row_index", [record.row_index for record in records])
        frame.to_csv(path, index=False, float_format="%.17g", encoding=self._encoding)

    @staticmethod
    def _parse_numbers(frame: pd.DataFrame, column: str) -> FloatArray:
        text = frame[column].str.strip()
        values = pd.to_numeric(text, errors="coerce").to_numpy(dtype=np.float64)
        bad = np.flatnonzero(~np.isfinite(values))

        if bad.size:
            row = int(bad[0])
            raise RowParseError(row + 1, column, frame[column].iloc[row])

        return values

    def _parse_ports(self, frame: pd.DataFrame, column: str) -> IntArray:
        values = self._parse_numbers(frame, column)
        bad = np.flatnonzero((values != np.floor(values)) | (values < 0) | (values > 65535))

        if bad.size:
            row = int(bad[0])
            raise RowParseError(row + 1, column, frame[column].iloc[row], reason="not a port number in 0..65535")

        return values.astype(np.int64)

    def _encode_features(self, frame: pd.DataFrame, schema: DatasetSchema) -> FloatArray:
        blocks = [self._parse_numbers(frame, column)[:, None] for column in schema.numeric_columns]

        for column in schema.categorical_columns:
            slot_of = {value: slot for slot, value in enumerate(column.vocabulary)}
            other = len(column.vocabulary)
            slots = np.array([slot_of.get(value.strip(), other) for value in frame[column.name]], dtype=np.int64)

            block = np.zeros((len(frame), column.width))
            block[np.arange(len(frame)), slots] = 1.0
            blocks.append(block)

        return np.hstack(blocks)

    @staticmethod
    def _encode_labels(frame: pd.DataFrame, schema: DatasetSchema) -> IntArray:
        class_of = {name: index for index, name in enumerate(schema.class_names)}
        raw = frame[schema.label_column].str.strip().tolist()
        labels = np.empty(len(raw), dtype=np.int64)

        for row, value in enumerate(raw):
            if value not in class_of:
                raise LabelError(row + 1, value, schema.class_names)

            labels[row] = class_of[value]

        return labels


def parse_csv(path: str, schema: DatasetSchema) -> list[FlowRecord]:
    """
    Parses a NetFlow CSV into one `FlowRecord` per data row, in file order.
    """

    return CsvFlowRepository().read(path, schema)
