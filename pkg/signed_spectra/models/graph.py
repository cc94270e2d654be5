from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional

import numpy as np

from signed_spectra.core.errors import (
    EmptyUnion,
    InvalidBipartition,
    MissingVertex,
)


def _frozen(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class SignedGraph:
    """Simple undirected graph with positive weights and a ±1 signature.

    ``weights`` and ``signs`` are dense symmetric N×N arrays; a zero entry
    means "no edge". Vertex ``labels[i]`` owns dense index ``i``.
    """

    labels: tuple[str, ...]
    weights: np.ndarray
    signs: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "weights", _frozen(np.asarray(self.weights, dtype=np.float64)))
        object.__setattr__(self, "signs", _frozen(np.asarray(self.signs, dtype=np.int8)))

    @classmethod
    def from_signed_adjacency(cls, signed: np.ndarray, labels: Optional[Iterable[str]] = None) -> "SignedGraph":
        signed = np.array(signed, dtype=np.float64)
        n = signed.shape[0]
        if labels is None:
            labels = [str(i) for i in range(n)]
        np.fill_diagonal(signed, 0.0)
        return cls(
            labels=tuple(labels),
            weights=np.abs(signed),
            signs=np.sign(signed).astype(np.int8),
        )

    # ── Basic structure ──────────────────────────────────────────────────

    @property
    def vertex_count(self) -> int:
        return len(self.labels)

    @cached_property
    def index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    @cached_property
    def signed_adjacency(self) -> np.ndarray:
        return _frozen(self.weights * self.signs)

    @cached_property
    def degrees(self) -> np.ndarray:
        return _frozen(self.weights.sum(axis=1))

    @cached_property
    def edge_arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        """(u, v, weight, sign) of every edge with u < v, in row-major index order."""
        u, v = np.nonzero(np.triu(self.weights, k=1))
        return (
            _frozen(u),
            _frozen(v),
            _frozen(self.weights[u, v].copy()),
            _frozen(self.signs[u, v].astype(np.float64)),
        )

    @property
    def edge_count(self) -> int:
        return int(self.edge_arrays[0].size)

    def edges(self) -> list[tuple[str, str, float, int]]:
        u, v, w, s = self.edge_arrays
        return [
            (self.labels[a], self.labels[b], float(weight), int(sign))
            for a, b, weight, sign in zip(u, v, w, s)
        ]

    def has_edge(self, a: str, b: str) -> bool:
        return self.weights[self.position(a), self.position(b)] > 0

    def neighbors(self, i: int) -> np.ndarray:
        return np.nonzero(self.weights[i])[0]

    def position(self, label: str) -> int:
        try:
            return self.index[label]
        except KeyError:
            raise MissingVertex(f"vertex {label!r} is not in the graph") from None

    def mask(self, vertices: Iterable[str]) -> np.ndarray:
        out = np.zeros(self.vertex_count, dtype=bool)
        for label in vertices:
            out[self.position(label)] = True
        return out

    def labels_of(self, mask_or_indices: np.ndarray) -> frozenset[str]:
        indices = np.flatnonzero(mask_or_indices) if mask_or_indices.dtype == bool else mask_or_indices
        return frozenset(self.labels[i] for i in indices)

    def as_vector(self, f) -> np.ndarray:
        """Coerce a label mapping or an index-aligned array into an array of shape (N,) or (N, k)."""
        if isinstance(f, Mapping):
            missing = [label for label in self.labels if label not in f]
            if missing:
                raise MissingVertex(f"function undefined on {missing[:3]}")
            return np.array([f[label] for label in self.labels], dtype=np.float64)
        array = np.asarray(f, dtype=np.float64)
        if array.shape[0] != self.vertex_count:
            raise MissingVertex(f"function has {array.shape[0]} entries for {self.vertex_count} vertices")
        return array

    def __eq__(self, other) -> bool:
        if not isinstance(other, SignedGraph):
            return NotImplemented
        return (
            self.labels == other.labels
            and np.array_equal(self.weights, other.weights)
            and np.array_equal(self.signs, other.signs)
        )

    def __hash__(self) -> int:
        return hash((self.labels, self.weights.tobytes(), self.signs.tobytes()))

    def __repr__(self) -> str:
        return f"SignedGraph(N={self.vertex_count}, edges={self.edge_count})"


@dataclass(frozen=True)
class SwitchingFunction:
    """θ: V → {+1, −1}."""

    signs: Mapping[str, int]

    def __post_init__(self):
        bad = {label: s for label, s in self.signs.items() if s not in (1, -1)}
        if bad:
            raise ValueError(f"switching values must be ±1, got {bad}")
        object.__setattr__(self, "signs", dict(self.signs))

    @classmethod
    def identity(cls, g: SignedGraph) -> "SwitchingFunction":
        return cls({label: 1 for label in g.labels})

    @classmethod
    def vertex(cls, g: SignedGraph, label: str) -> "SwitchingFunction":
        g.position(label)
        return cls({other: (-1 if other == label else 1) for other in g.labels})

    @classmethod
    def from_array(cls, g: SignedGraph, values: np.ndarray) -> "SwitchingFunction":
        return cls({label: int(values[i]) for i, label in enumerate(g.labels)})

    def as_array(self, g: SignedGraph) -> np.ndarray:
        missing = [label for label in g.labels if label not in self.signs]
        if missing:
            raise MissingVertex(f"switching function undefined on {missing[:3]}")
        return np.array([self.signs[label] for label in g.labels], dtype=np.int8)

    @property
    def negative_set(self) -> frozenset[str]:
        """V_θ^−."""
        return frozenset(label for label, s in self.signs.items() if s == -1)

    def __mul__(self, other: "SwitchingFunction") -> "SwitchingFunction":
        keys = self.signs.keys() | other.signs.keys()
        return SwitchingFunction({k: self.signs.get(k, 1) * other.signs.get(k, 1) for k in keys})

    def __hash__(self) -> int:
        return hash(frozenset(self.signs.items()))


@dataclass(frozen=True)
class SubBipartition:
    """Ordered pair (V_1, V_2) of disjoint vertex sets with nonempty union."""

    v1: frozenset[str]
    v2: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "v1", frozenset(self.v1))
        object.__setattr__(self, "v2", frozenset(self.v2))
        if not self.v1 and not self.v2:
            raise EmptyUnion("sub-bipartition has an empty union")
        overlap = self.v1 & self.v2
        if overlap:
            raise InvalidBipartition(f"V1 and V2 share {sorted(overlap)[:3]}")

    @property
    def union(self) -> frozenset[str]:
        return self.v1 | self.v2

    def indicator(self, g: SignedGraph) -> np.ndarray:
        """+1 on V_1, −1 on V_2, 0 elsewhere."""
        return g.mask(self.v1).astype(np.float64) - g.mask(self.v2).astype(np.float64)

    @classmethod
    def from_indicator(cls, g: SignedGraph, x: np.ndarray) -> "SubBipartition":
        return cls(g.labels_of(x > 0), g.labels_of(x < 0))

    def sorted(self) -> tuple[list[str], list[str]]:
        return sorted(self.v1), sorted(self.v2)


@dataclass(frozen=True)
class BalanceResult:
    """Outcome of a balance test: a balancing switching or a negative cycle."""

    balanced: bool
    switching: Optional[SwitchingFunction] = None
    negative_cycle: Optional[tuple[str, ...]] = None

    def __bool__(self) -> bool:
        return self.balanced
