from .graph_dump import TextGraphDumpRepository
