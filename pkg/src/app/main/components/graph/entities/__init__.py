from .flow_edge import FlowEdge, EdgeMask, MASK_CODES, MASKS_BY_CODE
from .flow_graph import FlowGraph
from .init_rule import InitRule, NodeInitKind
from .socket_node import SocketNode
