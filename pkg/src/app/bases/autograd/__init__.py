from .exceptions import AutogradError, ShapeMismatchError, InvalidLabelError, TapeError
from .gradcheck import gradcheck, gradcheck_errors
from .optim import Adam, adam_step
from .random import derive_key, rng_stream
from .tape import Tape, TapeNode, current_tape
from .tensor import Tensor, Parameter
from . import ops
