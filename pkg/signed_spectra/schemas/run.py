from enum import Enum
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, Field, field_validator

from signed_spectra.schemas.options import (
    CheegerMode,
    EmbeddingMode,
    ExactMethod,
    FrustrationMethod,
    MeasureKind,
    OperatorKind,
    PartitionStrategy,
)


class Command(str, Enum):
    SPECTRUM = "spectrum"
    CHEEGER = "cheeger"
    CLUSTER = "cluster"
    BOUNDS = "bounds"
    VERIFY = "verify"
    FRUSTRATION = "frustration"


# --- Request schemas ---


class RunConfig(BaseModel):
    """Validated options of one CLI invocation."""

    command: Command
    k: int = Field(1, ge=1)
    operator: OperatorKind = OperatorKind.NORMALIZED
    measure: MeasureKind = MeasureKind.DEGREE
    mode: EmbeddingMode = EmbeddingMode.BALANCED
    cheeger_mode: CheegerMode = CheegerMode.EXACT_ENUMERATION
    method: ExactMethod = ExactMethod.SUBSETS
    frustration_method: FrustrationMethod = FrustrationMethod.EXACT
    strategy: PartitionStrategy = PartitionStrategy.RANDOM_PADDED
    epsilon: Optional[float] = Field(None, gt=0.0, lt=2.0)
    seed: int = Field(0, ge=0, lt=2**64)
    budget: Optional[int] = Field(None, ge=1)
    out: Optional[Path] = None

    @field_validator("measure")
    @classmethod
    def measure_has_values(cls, value: MeasureKind) -> MeasureKind:
        if value == MeasureKind.CUSTOM:
            raise ValueError("custom measures cannot be chosen from the command line")
        return value
