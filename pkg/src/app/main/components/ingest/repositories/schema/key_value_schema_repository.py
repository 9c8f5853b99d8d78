import logging

from pydantic import ValidationError

from src.app.main.components.ingest.entities import DatasetSchema, CategoricalColumn
from src.app.main.components.ingest.exceptions import SchemaError
from src.core.state.config import KeyValueFileConfig
from src.core.utils.collections import split_list_value

_logger = logging.getLogger(__name__)


class KeyValueSchemaRepository:
    """
    Reads a `DatasetSchema` from a key-value text file:

        identifier_columns = IPV4_SRC_ADDR, L4_SRC_PORT, IPV4_DST_ADDR, L4_DST_PORT
        label_column = Attack
        class_names = Benign, DDoS, DoS, Reconnaissance, Theft
        numeric_columns = IN_BYTES, OUT_BYTES, FLOW_DURATION_MILLISECONDS
        categorical.PROTOCOL = 6, 17, 1

    Categorical blocks keep the order of their keys in the file.
    """

    CATEGORICAL_PREFIX: str = "categorical."
    LIST_KEYS: tuple[str, ...] = ("identifier_columns", "class_names", "numeric_columns")

    def __init__(self, encoding: str = "utf-8") -> None:
        self._encoding = encoding

    def load(self, path: str) -> DatasetSchema:
        """
        :param path: `str`
            Schema file path

        :return: `DatasetSchema`
            Validated schema

        :raises:
            :raise SchemaError: On unknown keys or a schema violating its invariants
        """

        raw = KeyValueFileConfig(path, encoding=self._encoding, normalize_keys=False).load()
        fields: dict[str, object] = {}
        categorical = []

        for key, value in raw.items():
            if key.startswith(self.CATEGORICAL_PREFIX):
                name = key[len(self.CATEGORICAL_PREFIX):].strip()
                categorical.append({"name": name, "vocabulary": tuple(split_list_value(value))})
            elif key in self.LIST_KEYS:
                fields[key] = tuple(split_list_value(value))
            elif key == "label_column":
                fields[key] = value
            else:
                raise SchemaError(f"{path}: unknown schema key '{key}'")

        try:
            schema = DatasetSchema(
                **fields,
                categorical_columns=tuple(CategoricalColumn(**column) for column in categorical)
            )
        except ValidationError as error:
            raise SchemaError(f"{path}: invalid schema ({error.error_count()} errors): {error}") from error

        _logger.debug(f"Loaded schema {path}: {schema.num_classes} classes, feature dimension {schema.feature_dim}")
        return schema
