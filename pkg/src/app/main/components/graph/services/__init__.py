from .graph_builder import build_graph, assemble_transductive, assemble_inductive, in_edges
