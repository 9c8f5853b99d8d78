from typing import Any

from pydantic import BaseModel, ConfigDict


class BaseSchema(BaseModel):
    """
    A base schema class for Pydantic models with additional utility methods.
    Schemas are immutable once validated.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    def to_json_dict(self, *args, **kwargs) -> dict[str, Any]:
        """
        Converts the schema instance to a JSON-compatible dictionary.

        :return: `dict[str, Any]`
            A dictionary representation of the schema in JSON format.
        """

        return self.model_dump(mode="json", *args, **kwargs)

    def to_key_values(self, prefix: str = "") -> dict[str, Any]:
        """
        Flat `prefix + field -> value` mapping (used for `.kv` artifacts and checkpoint headers).
        """

        return {f"{prefix}{key}": value for key, value in self.to_json_dict().items()}
