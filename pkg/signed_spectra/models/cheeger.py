from dataclasses import dataclass

from signed_spectra.models.graph import SubBipartition, SwitchingFunction
from signed_spectra.schemas.options import CheegerMode, FrustrationMethod


@dataclass(frozen=True)
class CheegerCertificate:
    """value == max_i β^σ(witness_i); witness pairs are mutually disjoint."""

    value: float
    witness: tuple[SubBipartition, ...]
    mode: CheegerMode

    @property
    def k(self) -> int:
        return len(self.witness)


@dataclass(frozen=True)
class FrustrationResult:
    """e^σ_min(S) with the deleted edge set and a switching attaining it.

    Under ``best_switching`` the deleted edges are exactly the negative
    edges of the induced subgraph, so |E^−(S)|(σ′) = 2·value.
    """

    value: float
    deleted_edges: tuple[tuple[str, str], ...]
    best_switching: SwitchingFunction
    method: FrustrationMethod

    @property
    def upper_bound(self) -> bool:
        return self.method == FrustrationMethod.LOCAL_SEARCH


@dataclass(frozen=True)
class SweepResult:
    bipartition: SubBipartition
    value: float
    threshold: float
    guarantee: float
