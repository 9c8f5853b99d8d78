from .ingest_service import IngestService, PreparedDataset
from .normalization import feature_matrix, normalize_fit, normalize_apply
from .sampling import (
    class_histogram,
    class_quota,
    group_by_label,
    round_half_up,
    stratified_sample,
    stratified_split
)
