from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict

from signed_spectra.schemas import SCHEMA_VERSION

VIOLATION_TOLERANCE = 1e-9


class BoundName(str, Enum):
    SIGNED_CHEEGER_LOWER = "signed_cheeger_lower"
    SIGNED_CHEEGER_UPPER = "signed_cheeger_upper"
    HIGHER_ORDER_LOWER = "higher_order_lower"
    HIGHER_ORDER_UPPER = "higher_order_upper"
    IMPROVED_CHEEGER = "improved_cheeger"
    IMPROVED_CHEEGER_DISJUNCTION = "improved_cheeger_disjunction"
    IMPROVED_HIGHER_ORDER = "improved_higher_order"
    DUAL_CHEEGER_LOWER = "dual_cheeger_lower"
    DUAL_CHEEGER_UPPER = "dual_cheeger_upper"
    DUALITY_IDENTITY = "duality_identity"
    TRIANGLE_LAMBDA1_LOWER = "triangle_lambda1_lower"
    TRIANGLE_LAMBDAN_UPPER = "triangle_lambdaN_upper"
    KIRCHHOFF_CHEEGER_LOWER = "kirchhoff_cheeger_lower"
    KIRCHHOFF_CHEEGER_UPPER = "kirchhoff_cheeger_upper"
    KIRCHHOFF_HIGHER_ORDER_LOWER = "kirchhoff_higher_order_lower"
    KIRCHHOFF_IMPROVED_CHEEGER = "kirchhoff_improved_cheeger"
    KIRCHHOFF_IMPROVED_CHEEGER_DISJUNCTION = "kirchhoff_improved_cheeger_disjunction"
    KIRCHHOFF_TRIANGLE_UPPER = "kirchhoff_triangle_upper"
    KIRCHHOFF_DEGREE_SUM_UPPER = "kirchhoff_degree_sum_upper"


class BoundStatus(str, Enum):
    VERIFIED = "verified"
    VIOLATED = "violated"
    VACUOUS = "vacuous"
    INFORMATIONAL = "informational"
    SKIPPED = "skipped"


class BoundReport(BaseModel):
    """One inequality lhs ≤ rhs; ``slack`` is rhs − lhs exactly as computed."""

    bound_name: BoundName
    lhs: Optional[float] = None
    rhs: Optional[float] = None
    slack: Optional[float] = None
    status: BoundStatus
    k: Optional[int] = None
    witness: Optional[list[str]] = None
    detail: Optional[str] = None

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "bound_name": "triangle_lambda1_lower",
                "lhs": 0.5,
                "rhs": 0.5,
                "slack": 0.0,
                "status": "verified",
                "witness": ["a", "b"],
            }
        }
    )

    @classmethod
    def compare(
        cls,
        name: BoundName,
        lhs: float,
        rhs: float,
        k: Optional[int] = None,
        witness: Optional[list[str]] = None,
        detail: Optional[str] = None,
        vacuous: bool = False,
        strict: bool = False,
    ) -> "BoundReport":
        """Report for lhs ≤ rhs (lhs < rhs when ``strict``) with the shared tolerance."""
        slack = rhs - lhs
        holds = slack > -VIOLATION_TOLERANCE if strict else slack >= -VIOLATION_TOLERANCE
        if not holds:
            status = BoundStatus.VIOLATED
        elif vacuous:
            status = BoundStatus.VACUOUS
        else:
            status = BoundStatus.VERIFIED
        return cls(bound_name=name, lhs=lhs, rhs=rhs, slack=slack, status=status, k=k, witness=witness, detail=detail)

    @classmethod
    def skipped(cls, name: BoundName, detail: str, k: Optional[int] = None) -> "BoundReport":
        return cls(bound_name=name, status=BoundStatus.SKIPPED, k=k, detail=detail)


# --- Response schemas ---


class BoundsResponse(BaseModel):
    schema_version: str = SCHEMA_VERSION
    reports: list[BoundReport]


class VerifySummary(BaseModel):
    """Outcome of ``verify`` over one file or a seeded corpus."""

    schema_version: str = SCHEMA_VERSION
    graphs: int
    reports: int
    verified: int
    violated: int
    vacuous: int
    informational: int
    skipped: int
    violations: list[BoundReport]
