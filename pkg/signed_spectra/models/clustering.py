from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from signed_spectra.models.graph import SignedGraph, SubBipartition
from signed_spectra.schemas.options import EmbeddingMode, PartitionStrategy


@dataclass(frozen=True, eq=False)
class Embedding:
    """Φ: V → R^k, row i is the image of ``graph.labels[i]``."""

    graph: SignedGraph
    points: np.ndarray
    source: str  # "first-k" | "last-k"

    @property
    def k(self) -> int:
        return int(self.points.shape[1])

    def __getitem__(self, label: str) -> np.ndarray:
        return self.points[self.graph.position(label)]


@dataclass(frozen=True, eq=False)
class NormalizedEmbedding:
    """Φ^nor on Ṽ_Φ = {v : Φ(v) ≠ 0}.

    ``indices`` are graph indices of the kept vertices, ``points`` their unit
    vectors and ``norms`` the original ‖Φ(v)‖.
    """

    embedding: Embedding
    indices: np.ndarray
    points: np.ndarray
    norms: np.ndarray
    excluded: tuple[str, ...]

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self.embedding.graph.labels[i] for i in self.indices)

    def as_dict(self) -> dict[str, np.ndarray]:
        return dict(zip(self.labels, self.points))


@dataclass(frozen=True)
class PartitionResult:
    subsets: tuple[frozenset[str], ...]
    masses: tuple[float, ...]
    separation: float
    attempts: int
    strategy: PartitionStrategy


@dataclass(frozen=True)
class ClusterDiagnostics:
    embedding_rayleigh: float
    localized_rayleigh: tuple[float, ...]
    selected_rayleigh: tuple[float, ...]
    selected_coordinates: tuple[int, ...]
    sweep_guarantees: tuple[float, ...]
    thresholds: tuple[float, ...]
    epsilon: float
    epsilon_shrunk: bool
    separation: float
    masses: tuple[float, ...]
    partition_attempts: int
    excluded_vertices: tuple[str, ...]
    lambda_k: float
    tripwire_ratio: Optional[float]
    tripwire_exceeded: bool
    notes: tuple[str, ...] = field(default_factory=tuple)


@dataclass(frozen=True)
class ClusterResult:
    """k disjoint sub-bipartitions found by the spectral pipeline.

    In antibalanced mode ``betas`` are measured against the negated signature.
    """

    k: int
    mode: EmbeddingMode
    strategy: PartitionStrategy
    seed: int
    parts: tuple[SubBipartition, ...]
    betas: tuple[float, ...]
    raw_subsets: tuple[frozenset[str], ...]
    diagnostics: ClusterDiagnostics

    @property
    def max_beta(self) -> float:
        return max(self.betas)
