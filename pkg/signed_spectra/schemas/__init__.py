SCHEMA_VERSION = "1.0"

from signed_spectra.schemas.errors import ErrorResponse, error_response  # noqa: E402
from signed_spectra.schemas.options import (  # noqa: E402
    CheegerMode,
    EmbeddingMode,
    ExactMethod,
    FrustrationMethod,
    MeasureKind,
    OperatorKind,
    PartitionStrategy,
    SignFilter,
)

__all__ = [
    "SCHEMA_VERSION",
    "ErrorResponse",
    "error_response",
    "CheegerMode",
    "EmbeddingMode",
    "ExactMethod",
    "FrustrationMethod",
    "MeasureKind",
    "OperatorKind",
    "PartitionStrategy",
    "SignFilter",
]
