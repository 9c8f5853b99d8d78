from .csv_trace_repository import CsvTraceRepository, TRACE_COLUMNS
