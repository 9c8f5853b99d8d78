from .layer_params import EdgmatLayerParams
from .model_config import ModelConfig
from .outputs import ForwardOutput, EdgePredictions, EpochRecord, TrainingTrace
