from .config import *
from .exceptions import ConfigSourceError
from .project_settings import ProjectSettings
