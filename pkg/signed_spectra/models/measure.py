from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from signed_spectra.core.errors import InvalidMeasure, IsolatedVertex, MissingVertex
from signed_spectra.models.graph import SignedGraph
from signed_spectra.schemas.options import MeasureKind


@dataclass(frozen=True, eq=False)
class VertexMeasure:
    """Positive vertex weighting μ, aligned with the graph's dense indices."""

    labels: tuple[str, ...]
    values: np.ndarray
    kind: MeasureKind

    def __post_init__(self):
        values = np.array(self.values, dtype=np.float64)
        if values.shape != (len(self.labels),):
            raise InvalidMeasure(f"measure has shape {values.shape} for {len(self.labels)} vertices")
        if not np.all(values > 0):
            bad = [self.labels[i] for i in np.flatnonzero(~(values > 0))[:3]]
            raise InvalidMeasure(f"measure must be strictly positive, fails at {bad}")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @classmethod
    def degree(cls, g: SignedGraph) -> "VertexMeasure":
        isolated = np.flatnonzero(g.degrees == 0)
        if isolated.size:
            raise IsolatedVertex(f"vertex {g.labels[isolated[0]]!r} has degree 0")
        return cls(g.labels, g.degrees, MeasureKind.DEGREE)

    @classmethod
    def unit(cls, g: SignedGraph) -> "VertexMeasure":
        return cls(g.labels, np.ones(g.vertex_count), MeasureKind.UNIT)

    @classmethod
    def custom(cls, g: SignedGraph, values: Mapping[str, float]) -> "VertexMeasure":
        missing = [label for label in g.labels if label not in values]
        if missing:
            raise MissingVertex(f"measure undefined on {missing[:3]}")
        return cls(g.labels, np.array([values[label] for label in g.labels]), MeasureKind.CUSTOM)

    @classmethod
    def of_kind(cls, g: SignedGraph, kind: MeasureKind) -> "VertexMeasure":
        if kind == MeasureKind.DEGREE:
            return cls.degree(g)
        if kind == MeasureKind.UNIT:
            return cls.unit(g)
        raise InvalidMeasure("custom measures need explicit values")

    @cached_property
    def _position(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    def __getitem__(self, label: str) -> float:
        return float(self.values[self._index(label)])

    def _index(self, label: str) -> int:
        try:
            return self._position[label]
        except KeyError:
            raise MissingVertex(f"vertex {label!r} is not in the measure") from None

    def volume(self, vertices: Iterable[str]) -> float:
        """vol_μ(S) = Σ_{u∈S} μ(u), summed in index order."""
        indices = sorted(self._index(label) for label in set(vertices))
        return float(self.values[indices].sum()) if indices else 0.0
