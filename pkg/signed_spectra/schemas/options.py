from enum import Enum


class MeasureKind(str, Enum):
    DEGREE = "degree"
    UNIT = "unit"
    CUSTOM = "custom"


class OperatorKind(str, Enum):
    NORMALIZED = "normalized"
    KIRCHHOFF = "kirchhoff"


class SignFilter(str, Enum):
    ALL = "all"
    POSITIVE = "positive"
    NEGATIVE = "negative"


class EmbeddingMode(str, Enum):
    BALANCED = "balanced"
    ANTIBALANCED = "antibalanced"


class PartitionStrategy(str, Enum):
    RANDOM_PADDED = "random-padded"
    PROJECTIVE_KMEANS = "projective-kmeans"


class FrustrationMethod(str, Enum):
    EXACT = "exact"
    LOCAL_SEARCH = "local-search"


class CheegerMode(str, Enum):
    EXACT_ENUMERATION = "exact-enumeration"
    SWEEP_UPPER_BOUND = "sweep-upper-bound"
    SWITCHING_FORM = "switching-form"


class ExactMethod(str, Enum):
    SUBSETS = "subsets"
    ASSIGNMENTS = "assignments"
    SWITCHING = "switching"
