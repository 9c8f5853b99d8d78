from .base import BaseSchema
