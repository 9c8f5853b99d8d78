from .key_value_schema_repository import KeyValueSchemaRepository
