class BaseApplicationError(Exception):
    """
    Root of every error raised by the detector pipeline.

    Command handlers map subclasses of this error to a non-zero exit status.
    """
