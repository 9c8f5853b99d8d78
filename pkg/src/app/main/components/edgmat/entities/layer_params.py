from dataclasses import dataclass

from src.app.bases.autograd import Parameter


@dataclass(frozen=True)
class EdgmatLayerParams:
    """
    Weights of one attention conv layer.

    Per head k: `node_weights[k]` (in_node_dim x out_dim), `edge_weights[k]` (in_edge_dim x out_dim)
    and `attention[k]` (3 * out_dim x 1). Shared: `residual` (in_node_dim x heads * out_dim) and
    `bias` (heads * out_dim).
    """

    in_node_dim: int
    in_edge_dim: int
    out_dim: int
    node_weights: tuple[Parameter, ...]
    edge_weights: tuple[Parameter, ...]
    attention: tuple[Parameter, ...]
    residual: Parameter
    bias: Parameter

    @property
    def heads(self) -> int:
        return len(self.node_weights)

    @property
    def out_node_dim(self) -> int:
        return self.heads * self.out_dim

    @property
    def out_edge_dim(self) -> int:
        return self.heads * 2 * self.out_dim

    def named_parameters(self, prefix: str) -> list[tuple[str, Parameter]]:
        named: list[tuple[str, Parameter]] = []

        for head in range(self.heads):
            named.append((f"{prefix}.head{head}.W_n", self.node_weights[head]))
            named.append((f"{prefix}.head{head}.W_e", self.edge_weights[head]))
            named.append((f"{prefix}.head{head}.a", self.attention[head]))

        named.append((f"{prefix}.W_s", self.residual))
        named.append((f"{prefix}.bias", self.bias))
        return named
