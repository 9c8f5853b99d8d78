from .report_repository import ReportRepository, WEIGHTED_ROW
