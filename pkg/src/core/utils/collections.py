from typing import Any, Iterable, Mapping


def split_list_value(value: str | Iterable[str], separator: str = ",") -> list[str]:
    """
    Splits a comma-separated config value into stripped, non-empty items.
    Already split iterables are stripped and passed through.

    :param value: `str | Iterable[str]`
        Raw value

    :param separator: `str`
        Item separator

    :return: `list[str]`
        Items in order
    """

    items = value.split(separator) if isinstance(value, str) else [str(item) for item in value]
    return [item.strip() for item in items if item.strip()]


def format_key_values(data: Mapping[str, Any]) -> str:
    """
    Renders a mapping in the `key = value` text format, one pair per line, in mapping order.
    Floats use `repr` so that values survive a round trip exactly.

    :param data: `Mapping[str, Any]`
        Data to render

    :return: `str`
        Rendered text ending with a newline
    """

    lines = []

    for key, value in data.items():
        if isinstance(value, float):
            value = repr(value)
        elif isinstance(value, (list, tuple)):
            value = ", ".join(repr(item) if isinstance(item, float) else str(item) for item in value)

        lines.append(f"{key} = {value}")

    return "\n".join(lines) + "\n"
