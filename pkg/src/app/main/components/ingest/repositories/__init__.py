from .flow import AbstractFlowRepository, CsvFlowRepository, parse_csv
from .schema import KeyValueSchemaRepository
