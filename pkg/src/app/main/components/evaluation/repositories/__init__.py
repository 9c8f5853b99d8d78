from .embeddings import CsvEmbeddingRepository
from .report import ReportRepository, WEIGHTED_ROW
