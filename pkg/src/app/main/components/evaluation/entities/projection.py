from dataclasses import dataclass

from src.core.utils.types import FloatArray


@dataclass(frozen=True)
class PcaProjection:
    """
    Top principal components (rows of `components`) of a mean-centered matrix,
    the variance along each and the projected coordinates of every row.
    """

    mean: FloatArray
    components: FloatArray
    explained_variance: FloatArray
    coordinates: FloatArray
    iterations: tuple[int, ...]
