from src.core.exceptions import BaseApplicationError, IllegalArgumentError


class AutogradError(BaseApplicationError):
    pass


class ShapeMismatchError(AutogradError, ValueError):
    def __init__(self, op: str, *shapes: tuple[int, ...]) -> None:
        rendered = ", ".join(str(shape) for shape in shapes)
        super().__init__(f"{op}: incompatible shapes {rendered}")
        self.op = op
        self.shapes = shapes


class InvalidLabelError(AutogradError, IllegalArgumentError):
    pass


class TapeError(AutogradError):
    pass
