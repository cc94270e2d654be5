import math
from typing import Optional

from pydantic import BaseModel

from signed_spectra.models.clustering import ClusterResult
from signed_spectra.schemas import SCHEMA_VERSION
from signed_spectra.schemas.cheeger import SubBipartitionModel
from signed_spectra.schemas.options import EmbeddingMode, PartitionStrategy


def _finite(value: Optional[float]) -> Optional[float]:
    return None if value is None or not math.isfinite(value) else value


class ClusterDiagnosticsModel(BaseModel):
    embedding_rayleigh: float
    localized_rayleigh: list[float]
    selected_rayleigh: list[float]
    selected_coordinates: list[int]
    sweep_guarantees: list[float]
    thresholds: list[float]
    epsilon: float
    epsilon_shrunk: bool
    separation: Optional[float]
    masses: list[float]
    partition_attempts: int
    excluded_vertices: list[str]
    lambda_k: float
    tripwire_ratio: Optional[float]
    tripwire_exceeded: bool
    notes: list[str]


# --- Response schemas ---


class ClusterResponse(BaseModel):
    schema_version: str = SCHEMA_VERSION
    k: int
    mode: EmbeddingMode
    strategy: PartitionStrategy
    seed: int
    parts: list[SubBipartitionModel]
    betas: list[float]
    raw_subsets: list[list[str]]
    diagnostics: ClusterDiagnosticsModel

    @classmethod
    def from_domain(cls, result: ClusterResult) -> "ClusterResponse":
        d = result.diagnostics
        return cls(
            k=result.k,
            mode=result.mode,
            strategy=result.strategy,
            seed=result.seed,
            parts=[SubBipartitionModel.from_domain(bp) for bp in result.parts],
            betas=list(result.betas),
            raw_subsets=[sorted(subset) for subset in result.raw_subsets],
            diagnostics=ClusterDiagnosticsModel(
                embedding_rayleigh=d.embedding_rayleigh,
                localized_rayleigh=list(d.localized_rayleigh),
                selected_rayleigh=list(d.selected_rayleigh),
                selected_coordinates=list(d.selected_coordinates),
                sweep_guarantees=list(d.sweep_guarantees),
                thresholds=list(d.thresholds),
                epsilon=d.epsilon,
                epsilon_shrunk=d.epsilon_shrunk,
                separation=_finite(d.separation),
                masses=list(d.masses),
                partition_attempts=d.partition_attempts,
                excluded_vertices=list(d.excluded_vertices),
                lambda_k=d.lambda_k,
                tripwire_ratio=_finite(d.tripwire_ratio),
                tripwire_exceeded=d.tripwire_exceeded,
                notes=list(d.notes),
            ),
        )
