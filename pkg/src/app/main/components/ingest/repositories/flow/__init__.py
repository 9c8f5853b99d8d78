from .abc import AbstractFlowRepository
from .csv_flow_repository import CsvFlowRepository, parse_csv
