from .handlers import *
