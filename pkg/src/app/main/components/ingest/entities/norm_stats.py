from pydantic import model_validator

from src.app.bases.schemas import BaseSchema


class NormStats(BaseSchema):
    """
    Per-position z-score statistics (population standard deviation; 0 for constant positions).
    """

    positions: tuple[int, ...]
    mean: tuple[float, ...]
    std: tuple[float, ...]

    @model_validator(mode="after")
    def _check_lengths(self) -> 'NormStats':
        if not len(self.positions) == len(self.mean) == len(self.std):
            raise ValueError("positions, mean and std must have equal lengths")

        return self
