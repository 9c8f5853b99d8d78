from pydantic import Field

from src.app.bases.schemas import BaseSchema


class ModelConfig(BaseSchema):
    """
    Hyper-parameters of the attention model and of its training loop.

    Two conv layers, dropout 0.2 and learning rate 0.01 follow the published training setup;
    heads, hidden width, LeakyReLU slope and Adam moments are unstated there and are plain defaults.
    """

    layers: int = Field(default=2, ge=1)
    heads: int = Field(default=4, ge=1)
    hidden: int = Field(default=32, ge=1)
    dropout: float = Field(default=0.2, ge=0, lt=1)
    lr: float = Field(default=0.01, ge=0)
    epochs: int = Field(default=150, ge=0)
    leaky_slope: float = Field(default=0.2, ge=0)
    num_classes: int = Field(default=2, ge=1)
    seed: int = 0
    adam_beta1: float = Field(default=0.9, ge=0, lt=1)
    adam_beta2: float = Field(default=0.999, ge=0, lt=1)
    adam_eps: float = Field(default=1e-8, gt=0)

    @property
    def node_embedding_dim(self) -> int:
        return self.heads * self.hidden

    @property
    def edge_embedding_dim(self) -> int:
        return self.heads * 2 * self.hidden
