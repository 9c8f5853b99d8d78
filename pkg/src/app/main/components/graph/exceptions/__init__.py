from .base import GraphError
from .generics import OverlappingRecordsError, NodeIndexError
