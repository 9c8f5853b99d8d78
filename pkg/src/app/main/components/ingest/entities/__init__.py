from .dataset_schema import DatasetSchema, CategoricalColumn, OTHER_SLOT
from .flow_record import FlowRecord, SocketKey
from .norm_stats import NormStats
from .split_spec import SplitSpec, TopologyMode
