from .csv_embedding_repository import CsvEmbeddingRepository
