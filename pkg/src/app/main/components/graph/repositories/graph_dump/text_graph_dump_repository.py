from src.app.main.components.graph.entities import FlowGraph


class TextGraphDumpRepository:
    """
    Plain-text graph dump for debugging and oracle tests. Tab-separated lines:

        node <index> <ip> <port>
        edge <edge id> <src index> <dst index> <label> <mask>

    All node lines come before the edge lines.
    """

    def __init__(self, encoding: str = "utf-8") -> None:
        self._encoding = encoding

    @staticmethod
    def render(graph: FlowGraph) -> str:
        lines = [f"node\t{index}\t{ip}\t{port}" for index, (ip, port) in enumerate(graph.node_keys)]
        lines.extend(
            f"edge\t{edge}\t{graph.src[edge]}\t{graph.dst[edge]}\t{graph.labels[edge]}\t{graph.mask_of(edge).value}"
            for edge in range(graph.num_edges)
        )
        return "\n".join(lines) + ("\n" if lines else "")

    def save(self, graph: FlowGraph, path: str) -> None:
        with open(path, "w", encoding=self._encoding) as file:
            file.write(self.render(graph))
