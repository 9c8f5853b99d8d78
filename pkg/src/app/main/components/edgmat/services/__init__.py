from .layer import (
    HeadProjection,
    attention_coefficients,
    edge_update,
    glorot_parameter,
    init_layer,
    node_update,
    project
)
from .model import EdgmatModel, softmax_rows
from .trainer import class_weights, train
from .diagnostics import gradcheck_model, jitter_biases, parameter_group, random_records, run_gradcheck, training_loss
