import os

# Other
ENCODING = "utf-8"

# Logs
LOG_ENV_VARIABLE = "EDGMAT_LOG"
DEFAULT_LOG_LEVEL = "info"

# Data
DATASET = None
SCHEMA = None
MODE = "transductive"
SAMPLE_FRACTION = 1.0
TRAIN_FRACTION = 0.7
NODE_INIT = "ones"
NODE_INIT_VALUE = 1.0

# Model
LAYERS = 2
HEADS = 4
HIDDEN = 32
DROPOUT = 0.2
LR = 0.01
EPOCHS = 150
LEAKY_SLOPE = 0.2
ADAM_BETA1 = 0.9
ADAM_BETA2 = 0.999
ADAM_EPS = 1e-8
SEED = 0

# Outputs
OUT = os.path.join("runs", "latest")
PROJECTION = "pca2"
EMBEDDING_SOURCE = "final"
DUMP_GRAPH = False
DUMP_ENCODED = False
LOSS_LOG_EVERY = 10  # epochs between INFO loss lines

# Gradcheck diagnostic
GRADCHECK_GRAPHS = 20
GRADCHECK_TOLERANCE = 1e-4
