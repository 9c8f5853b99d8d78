from .text_graph_dump_repository import TextGraphDumpRepository
