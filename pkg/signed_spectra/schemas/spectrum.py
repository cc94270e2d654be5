from typing import Optional

from pydantic import BaseModel

from signed_spectra.schemas import SCHEMA_VERSION
from signed_spectra.schemas.options import OperatorKind


# --- Response schemas ---


class SpectrumResponse(BaseModel):
    schema_version: str = SCHEMA_VERSION
    operator: OperatorKind
    eigenvalues: list[float]
    balanced: bool
    antibalanced: bool
    negative_cycle: Optional[list[str]] = None
