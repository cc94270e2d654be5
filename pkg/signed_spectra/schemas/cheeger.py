from typing import Optional

from pydantic import BaseModel

from signed_spectra.models.cheeger import CheegerCertificate, FrustrationResult
from signed_spectra.models.graph import SubBipartition
from signed_spectra.schemas import SCHEMA_VERSION
from signed_spectra.schemas.options import CheegerMode, FrustrationMethod, MeasureKind


class SubBipartitionModel(BaseModel):
    """(V_1, V_2) with each side listed in sorted label order."""

    v1: list[str]
    v2: list[str]

    @classmethod
    def from_domain(cls, bp: SubBipartition) -> "SubBipartitionModel":
        v1, v2 = bp.sorted()
        return cls(v1=v1, v2=v2)


# --- Response schemas ---


class CheegerResponse(BaseModel):
    schema_version: str = SCHEMA_VERSION
    k: int
    measure: MeasureKind
    value: float
    witness: list[SubBipartitionModel]
    mode: CheegerMode

    @classmethod
    def from_domain(cls, certificate: CheegerCertificate, measure: MeasureKind) -> "CheegerResponse":
        return cls(
            k=certificate.k,
            measure=measure,
            value=certificate.value,
            witness=[SubBipartitionModel.from_domain(bp) for bp in certificate.witness],
            mode=certificate.mode,
        )


class FrustrationResponse(BaseModel):
    schema_version: str = SCHEMA_VERSION
    value: float
    deleted_edges: list[list[str]]
    switched_vertices: list[str]
    method: FrustrationMethod
    upper_bound: bool
    vertices: Optional[list[str]] = None

    @classmethod
    def from_domain(cls, result: FrustrationResult, vertices: Optional[list[str]] = None) -> "FrustrationResponse":
        return cls(
            value=result.value,
            deleted_edges=[list(edge) for edge in result.deleted_edges],
            switched_vertices=sorted(result.best_switching.negative_set),
            method=result.method,
            upper_bound=result.upper_bound,
            vertices=vertices,
        )
