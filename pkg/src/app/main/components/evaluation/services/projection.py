"""
Two-component PCA by power iteration with deflation.

Each component starts from a seeded random vector, is iterated on the deflated covariance
and Gram-Schmidt orthogonalized against earlier components at every step. Components are
signed so that their largest-magnitude loading is positive.
"""

import logging

import numpy as np

from src.app.bases.autograd import rng_stream
from src.app.main.components.evaluation.entities import PcaProjection
from src.app.main.components.evaluation.exceptions import ProjectionError
from src.core.utils.types import FloatArray

_logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = 1e-9
DEFAULT_MAX_ITERATIONS = 1000


def _orthogonalize(vector: FloatArray, basis: list[FloatArray]) -> FloatArray:
    for component in basis:
        vector = vector - np.dot(vector, component) * component

    return vector


def _fix_sign(vector: FloatArray) -> FloatArray:
    return vector if vector[np.argmax(np.abs(vector))] >= 0 else -vector


def power_iteration(
        covariance: FloatArray,
        basis: list[FloatArray],
        start: FloatArray,
        tolerance: float = DEFAULT_TOLERANCE,
        max_iterations: int = DEFAULT_MAX_ITERATIONS
) -> tuple[FloatArray, int]:
    """
    Dominant unit eigenvector of `covariance` restricted to the complement of `basis`.

    When the restricted covariance vanishes (rank exhausted) the orthogonalized start
    vector is returned; its eigenvalue is 0.

    :return: `tuple[FloatArray, int]`
        Unit vector and the number of iterations used
    """

    vector = _orthogonalize(start, basis)
    vector = vector / np.linalg.norm(vector)

    for iteration in range(1, max_iterations + 1):
        candidate = _orthogonalize(covariance @ vector, basis)
        norm = np.linalg.norm(candidate)

        if norm <= tolerance:
            return vector, iteration

        candidate = candidate / norm

        if np.linalg.norm(candidate - np.sign(np.dot(candidate, vector) or 1.0) * vector) < tolerance:
            return candidate, iteration

        vector = candidate

    _logger.warning(f"Power iteration did not reach tolerance {tolerance} in {max_iterations} iterations")
    return vector, max_iterations


def pca2(
        matrix: FloatArray,
        seed: int = 0,
        tolerance: float = DEFAULT_TOLERANCE,
        max_iterations: int = DEFAULT_MAX_ITERATIONS
) -> PcaProjection:
    """
    Projects the rows of `matrix` onto its top-2 principal components.

    :param matrix: `FloatArray`
        n x d data, d >= 2

    :param seed: `int`
        Seed of the start vectors (`"pca"` stream)

    :raises:
        :raise ProjectionError: If the data has fewer than 2 dimensions
    """

    matrix = np.asarray(matrix, dtype=np.float64)

    if matrix.ndim != 2 or matrix.shape[1] < 2:
        raise ProjectionError(f"pca2 needs at least 2 embedding dimensions, got shape {matrix.shape}")

    rows, width = matrix.shape
    mean = matrix.mean(axis=0) if rows else np.zeros(width)
    centered = matrix - mean
    covariance = centered.T @ centered / max(rows, 1)
    deflated = covariance.copy()

    rng = rng_stream(seed, "pca")
    components: list[FloatArray] = []
    variances: list[float] = []
    iterations: list[int] = []

    for _ in range(2):
        vector, used = power_iteration(deflated, components, rng.standard_normal(width), tolerance, max_iterations)
        vector = _fix_sign(vector)
        variance = max(0.0, float(vector @ covariance @ vector))

        deflated = deflated - variance * np.outer(vector, vector)
        components.append(vector)
        variances.append(variance)
        iterations.append(used)

    basis = np.vstack(components)

    return PcaProjection(
        mean=mean,
        components=basis,
        explained_variance=np.array(variances),
        coordinates=centered @ basis.T,
        iterations=tuple(iterations)
    )
