import logging

from src.app.bases.schemas import BaseSchema
from src.app.main.components.ingest.entities import DatasetSchema, FlowRecord, NormStats, SplitSpec
from src.app.main.components.ingest.repositories import (
    AbstractFlowRepository,
    CsvFlowRepository,
    KeyValueSchemaRepository
)
from src.core.loggers import log_calls
from .normalization import normalize_fit, normalize_apply
from .sampling import stratified_sample, stratified_split, class_histogram

_logger = logging.getLogger(__name__)


class PreparedDataset(BaseSchema):
    """
    Output of the ingestion pipeline: normalized train/test records plus bookkeeping.
    """

    dataset_schema: DatasetSchema
    train: tuple[FlowRecord, ...]
    test: tuple[FlowRecord, ...]
    norm_stats: NormStats | None
    parsed_histogram: dict[int, int]
    sampled_histogram: dict[int, int]

    @property
    def feature_dim(self) -> int:
        return self.dataset_schema.feature_dim

    @property
    def records(self) -> tuple[FlowRecord, ...]:
        return self.train + self.test


@log_calls()
class IngestService:
    """
    parse → stratified sample → stratified split → z-score fit on train, applied to both parts.
    """

    def __init__(
            self,
            flow_repository: AbstractFlowRepository | None = None,
            schema_repository: KeyValueSchemaRepository | None = None
    ) -> None:
        self._flow_repository = flow_repository or CsvFlowRepository()
        self._schema_repository = schema_repository or KeyValueSchemaRepository()

    def load_schema(self, path: str) -> DatasetSchema:
        return self._schema_repository.load(path)

    def load_records(self, path: str, schema: DatasetSchema) -> list[FlowRecord]:
        return self._flow_repository.read(path, schema)

    def prepare(
            self,
            dataset_path: str,
            schema: DatasetSchema,
            sample_fraction: float,
            split: SplitSpec
    ) -> PreparedDataset:
        records = self.load_records(dataset_path, schema)
        sampled = stratified_sample(records, sample_fraction, split.seed)
        train, test = stratified_split(sampled, split)

        _logger.info(f"Split {len(sampled)} flows into {len(train)} train / {len(test)} test ({split.mode.value})")

        stats = normalize_fit(train, schema.numeric_positions) if train else None

        if stats is not None:
            train = normalize_apply(train, stats)
            test = normalize_apply(test, stats)

        return PreparedDataset(
            dataset_schema=schema,
            train=tuple(train),
            test=tuple(test),
            norm_stats=stats,
            parsed_histogram=class_histogram(records),
            sampled_histogram=class_histogram(sampled)
        )

    def write_encoded(self, records: tuple[FlowRecord, ...], schema: DatasetSchema, path: str) -> None:
        self._flow_repository.write_encoded(records, schema, path)
