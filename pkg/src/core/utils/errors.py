from traceback import format_exception


def get_traceback_text(error: BaseException) -> str:
    """
    Returns the traceback text of an exception.

    :param error: `BaseException`
        The exception from which to get the traceback text.

    :return: `str`
        The formatted traceback text.
    """

    return "".join(format_exception(type(error), error, error.__traceback__))


def describe_error(error: BaseException) -> str:
    """
    One-line description of an error and its cause chain, e.g.
    `RowParseError: row 3: ... <- ValueError: could not convert ...`.

    :param error: `BaseException`
        Outermost error

    :return: `str`
        Description
    """

    parts = []
    current: BaseException | None = error

    while current is not None and len(parts) < 5:
        parts.append(f"{current.__class__.__name__}: {current}")
        current = current.__cause__

    return " <- ".join(parts)
