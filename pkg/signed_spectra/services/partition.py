"""Partitioning of normalized spectral points under the projective pseudometric.

Two strategies are offered. ``random-padded`` grows balls of random radius
around randomly ordered centres and keeps the k heaviest balls; it retries
with a halved radius when too few balls appear. ``projective-kmeans`` is a
Lloyd iteration whose centres are principal axes of the mass-weighted
scatter xxᵀ, so x and −x pull a centre the same way.
"""
import logging
from typing import Optional

import numpy as np

from signed_spectra.core.config import settings
from signed_spectra.core.errors import IndexOutOfRange, PartitionFailure
from signed_spectra.models.clustering import NormalizedEmbedding, PartitionResult
from signed_spectra.models.measure import VertexMeasure
from signed_spectra.schemas.options import PartitionStrategy
from signed_spectra.services.eigensolver import eigh

logger = logging.getLogger(__name__)

_SAME_CLASS = 1e-9


def projective_distances(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Pairwise min(‖x+y‖, ‖x−y‖) between rows of unit-vector arrays."""
    inner = np.abs(x @ y.T)
    return np.sqrt(np.maximum(0.0, 2.0 - 2.0 * inner))


def distinct_classes(points: np.ndarray) -> int:
    """Number of projective classes among unit vectors, greedy at tolerance 1e-9."""
    remaining = np.ones(points.shape[0], dtype=bool)
    count = 0
    distances = projective_distances(points, points)
    for i in range(points.shape[0]):
        if remaining[i]:
            count += 1
            remaining &= distances[i] > _SAME_CLASS
    return count


def _masses(normalized: NormalizedEmbedding, mu: VertexMeasure) -> np.ndarray:
    """μ(u)‖Φ(u)‖² on Ṽ_Φ, scaled to total 1."""
    raw = mu.values[normalized.indices] * normalized.norms**2
    return raw / raw.sum()


def _separation(distances: np.ndarray, labels: np.ndarray, k: int) -> float:
    if k == 1:
        return float("inf")
    best = np.inf
    for i in range(k):
        for j in range(i + 1, k):
            block = distances[np.ix_(labels == i, labels == j)]
            if block.size:
                best = min(best, float(block.min()))
    return best


def _result(normalized, labels, k, masses, separation, attempts, strategy) -> PartitionResult:
    names = np.array(normalized.labels, dtype=object)
    return PartitionResult(
        subsets=tuple(frozenset(names[labels == i]) for i in range(k)),
        masses=tuple(float(masses[labels == i].sum()) for i in range(k)),
        separation=float(separation),
        attempts=attempts,
        strategy=strategy,
    )


def _ball_growing(distances, masses, k, rng, mass_floor, sep_floor):
    m = masses.size
    radius = 2.0
    best: Optional[tuple] = None
    for attempt in range(1, settings.PARTITION_RETRY_CAP + 1):
        owner = np.full(m, -1)
        for centre in rng.permutation(m):
            if owner[centre] >= 0:
                continue
            reach = rng.uniform(radius / 2.0, radius)
            owner[(owner < 0) & (distances[centre] < reach)] = centre

        centres = np.unique(owner)
        if centres.size < k:
            logger.debug("partition attempt=%d radius=%.4f balls=%d < k=%d", attempt, radius, centres.size, k)
            radius /= 2.0
            continue

        weight = np.array([masses[owner == c].sum() for c in centres])
        # heaviest first; stable so ties keep the lower centre index
        keep = centres[np.argsort(-weight, kind="stable")[:k]]
        labels = np.full(m, -1)
        for i, c in enumerate(keep):
            labels[owner == c] = i

        separation = _separation(distances, labels, k)
        smallest = min(float(masses[labels == i].sum()) for i in range(k))
        score = (smallest >= mass_floor and separation >= sep_floor, smallest, separation)
        if best is None or score > best[0]:
            best = (score, labels, separation, attempt)
        if score[0]:
            return labels, separation, attempt, True
        logger.debug("partition attempt=%d smallest mass=%.4f separation=%.4f", attempt, smallest, separation)

    if best is None:
        return None, 0.0, settings.PARTITION_RETRY_CAP, False
    return best[1], best[2], best[3], False


def _principal_axis(points: np.ndarray, masses: np.ndarray) -> np.ndarray:
    scatter = (points * masses[:, None]).T @ points
    _, vectors = eigh(scatter)
    axis = vectors[:, -1]
    return axis / np.linalg.norm(axis)


def _projective_kmeans(points, distances, masses, k, rng):
    m = points.shape[0]
    chosen = [int(rng.integers(m))]
    nearest = distances[chosen[0]].copy()
    while len(chosen) < k:
        nxt = int(np.argmax(nearest))
        chosen.append(nxt)
        nearest = np.minimum(nearest, distances[nxt])
    centres = points[chosen].copy()

    labels = np.full(m, -1)
    for iteration in range(1, settings.KMEANS_MAX_ITER + 1):
        updated = np.argmin(projective_distances(points, centres), axis=1)
        if np.array_equal(updated, labels):
            break
        labels = updated
        for i in range(k):
            members = labels == i
            if members.any():
                centres[i] = _principal_axis(points[members], masses[members])
    logger.debug("projective k-means k=%d iterations=%d", k, iteration)
    return labels, iteration


def partition_projective(
    normalized: NormalizedEmbedding,
    mu: VertexMeasure,
    k: int,
    strategy: PartitionStrategy = PartitionStrategy.RANDOM_PADDED,
    seed: Optional[int] = None,
    mass_floor: Optional[float] = None,
    sep_floor: float = 0.0,
) -> PartitionResult:
    """k nonempty disjoint subsets of Ṽ_Φ.

    Masses are fractions of Σ μ(u)‖Φ(u)‖². The random-padded strategy insists
    on ``mass_floor`` (default 1/(4k)) and ``sep_floor``.
    """
    strategy = PartitionStrategy(strategy)
    seed = settings.DEFAULT_SEED if seed is None else seed
    mass_floor = 1.0 / (4.0 * k) if mass_floor is None else mass_floor
    points = normalized.points
    m = points.shape[0]
    if k < 1:
        raise IndexOutOfRange(f"k={k} must be positive")
    masses = _masses(normalized, mu) if m else np.zeros(0)
    distances = projective_distances(points, points)

    classes = distinct_classes(points)
    if k > classes:
        raise PartitionFailure(f"k={k} exceeds the {classes} distinct projective points")
    if k == 1:
        return _result(normalized, np.zeros(m, dtype=int), 1, masses, float("inf"), 1, strategy)

    rng = np.random.default_rng(seed)
    if strategy == PartitionStrategy.PROJECTIVE_KMEANS:
        labels, iterations = _projective_kmeans(points, distances, masses, k, rng)
        result = _result(normalized, labels, k, masses, _separation(distances, labels, k), iterations, strategy)
        if any(not subset for subset in result.subsets):
            raise PartitionFailure("projective k-means left a cluster empty", best_attempt=result)
        return result

    labels, separation, attempts, ok = _ball_growing(distances, masses, k, rng, mass_floor, sep_floor)
    if labels is None:
        raise PartitionFailure(f"no attempt produced {k} balls in {attempts} tries")
    result = _result(normalized, labels, k, masses, separation, attempts, strategy)
    if not ok:
        logger.warning("partition failed after %d attempts", attempts)
        raise PartitionFailure(
            f"no attempt reached mass floor {mass_floor:.4g} and separation {sep_floor:.4g} "
            f"in {attempts} tries",
            best_attempt=result,
        )
    return result
