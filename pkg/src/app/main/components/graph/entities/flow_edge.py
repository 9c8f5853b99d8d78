from enum import Enum

from src.app.bases.schemas import BaseSchema


class EdgeMask(Enum):
    NONE = "none"
    TRAIN = "train"
    TEST = "test"


MASK_CODES: dict[EdgeMask, int] = {EdgeMask.NONE: 0, EdgeMask.TRAIN: 1, EdgeMask.TEST: 2}
MASKS_BY_CODE: dict[int, EdgeMask] = {code: mask for mask, code in MASK_CODES.items()}


class FlowEdge(BaseSchema):
    """
    One flow as a directed edge from its source socket to its destination socket.
    Self-flows and parallel edges are kept as they are.
    """

    index: int
    src: int
    dst: int
    features: tuple[float, ...]
    label: int
    record_index: int
    mask: EdgeMask
