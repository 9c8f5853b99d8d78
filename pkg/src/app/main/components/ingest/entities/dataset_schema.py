from pydantic import Field, field_validator, model_validator

from src.app.bases.schemas import BaseSchema

OTHER_SLOT = "__other__"


class CategoricalColumn(BaseSchema):
    name: str
    vocabulary: tuple[str, ...] = Field(min_length=1)

    # noinspection PyNestedDecorators
    @field_validator("vocabulary")
    @classmethod
    def _check_unique(cls, value: tuple[str, ...]) -> tuple[str, ...]:
        if len(set(value)) != len(value):
            raise ValueError("vocabulary contains duplicates")

        return value

    @property
    def width(self) -> int:
        return len(self.vocabulary) + 1  # + reserved "other" slot


class DatasetSchema(BaseSchema):
    """
    Column roles of a NetFlow CSV.

    `identifier_columns` are, in order: source IP, source port, destination IP, destination port.
    The encoded feature vector is the numeric columns in schema order followed by one one-hot
    block per categorical column (vocabulary order, then the "other" slot).
    """

    identifier_columns: tuple[str, str, str, str]
    label_column: str
    class_names: tuple[str, ...] = Field(min_length=1)
    numeric_columns: tuple[str, ...] = ()
    categorical_columns: tuple[CategoricalColumn, ...] = ()

    @model_validator(mode="after")
    def _check_roles(self) -> 'DatasetSchema':
        groups = {
            "identifier_columns": list(self.identifier_columns),
            "label_column": [self.label_column],
            "numeric_columns": list(self.numeric_columns),
            "categorical_columns": [column.name for column in self.categorical_columns]
        }
        seen: dict[str, str] = {}

        for group, columns in groups.items():
            for column in columns:
                if column in seen:
                    raise ValueError(f"column '{column}' appears in both {seen[column]} and {group}")

                seen[column] = group

        if len(set(self.class_names)) != len(self.class_names):
            raise ValueError("class_names contains duplicates")

        if not self.numeric_columns and not self.categorical_columns:
            raise ValueError("schema declares no feature columns")

        return self

    @property
    def num_classes(self) -> int:
        return len(self.class_names)

    @property
    def feature_dim(self) -> int:
        return len(self.numeric_columns) + sum(column.width for column in self.categorical_columns)

    @property
    def numeric_positions(self) -> tuple[int, ...]:
        return tuple(range(len(self.numeric_columns)))

    @property
    def feature_names(self) -> tuple[str, ...]:
        names = list(self.numeric_columns)

        for column in self.categorical_columns:
            names.extend(f"{column.name}={value}" for value in column.vocabulary)
            names.append(f"{column.name}={OTHER_SLOT}")

        return tuple(names)

    @property
    def required_columns(self) -> tuple[str, ...]:
        return (
            *self.identifier_columns,
            self.label_column,
            *self.numeric_columns,
            *(column.name for column in self.categorical_columns)
        )
