import logging
from collections.abc import Sequence
from functools import lru_cache

import numpy as np

from signed_spectra.core.config import settings
from signed_spectra.core.errors import (
    DisjointnessViolation,
    IndexOutOfRange,
    IsolatedVertex,
    ZeroFunction,
)
from signed_spectra.models.graph import SignedGraph
from signed_spectra.models.measure import VertexMeasure
from signed_spectra.models.spectrum import Spectrum
from signed_spectra.schemas.options import OperatorKind
from signed_spectra.services.eigensolver import eigh, fix_signs
from signed_spectra.services.graph_core import negate

logger = logging.getLogger(__name__)


def _require_degrees(g: SignedGraph) -> np.ndarray:
    degrees = g.degrees
    isolated = np.flatnonzero(degrees == 0)
    if isolated.size:
        raise IsolatedVertex(
            f"vertex {g.labels[isolated[0]]!r} is isolated; the normalized Laplacian needs d_u > 0"
        )
    return degrees


def normalized_laplacian(g: SignedGraph) -> np.ndarray:
    """I − D^{-1/2} A^σ D^{-1/2}, the symmetric form similar to Δ^σ = I − D^{-1}A^σ."""
    inv_sqrt = 1.0 / np.sqrt(_require_degrees(g))
    m = np.eye(g.vertex_count) - inv_sqrt[:, None] * g.signed_adjacency * inv_sqrt[None, :]
    return (m + m.T) / 2.0


def kirchhoff(g: SignedGraph) -> np.ndarray:
    """L^σ = D − A^σ."""
    return np.diag(g.degrees) - g.signed_adjacency


def spectrum(g: SignedGraph, operator: OperatorKind = OperatorKind.NORMALIZED) -> Spectrum:
    """Full eigendecomposition of Δ^σ or L^σ.

    Eigenfunctions are orthonormal in the μ_d (resp. μ_1) inner product and
    satisfy the operator form Δ^σφ = λφ; each has a positive first nonzero entry.
    """
    return _spectrum(g, OperatorKind(operator), settings.EIGENSOLVER)


@lru_cache(maxsize=256)
def _spectrum(g: SignedGraph, operator: OperatorKind, solver: str) -> Spectrum:
    if operator == OperatorKind.NORMALIZED:
        matrix = normalized_laplacian(g)
        measure = VertexMeasure.degree(g)
    else:
        matrix = kirchhoff(g)
        measure = VertexMeasure.unit(g)

    eigenvalues, vectors = eigh(matrix)
    if operator == OperatorKind.NORMALIZED:
        # back to the operator form: φ = D^{-1/2} y
        vectors = vectors / np.sqrt(g.degrees)[:, None]
    vectors = fix_signs(vectors)
    logger.debug("spectrum operator=%s solver=%s N=%d", operator.value, solver, g.vertex_count)
    return Spectrum(eigenvalues=eigenvalues, eigenfunctions=vectors, measure=measure, operator=operator)


def _quotient(g: SignedGraph, f, mu: VertexMeasure, sign: float) -> float:
    values = g.as_vector(f)
    if values.ndim == 1:
        values = values[:, None]
    denominator = float(np.sum(mu.values * np.sum(values * values, axis=1)))
    if denominator == 0.0:
        raise ZeroFunction("Rayleigh quotient of the zero function is undefined")
    u, v, w, s = g.edge_arrays
    diff = values[u] - sign * s[:, None] * values[v]
    numerator = float(np.sum(w * np.sum(diff * diff, axis=1)))
    return numerator / denominator


def rayleigh(g: SignedGraph, f, mu: VertexMeasure) -> float:
    """R^σ(f) = Σ_{u∼v} w_uv ‖f(u) − σ(uv)f(v)‖² / Σ_u μ(u)‖f(u)‖².

    ``f`` may be a label mapping or an array of shape (N,) or (N, k).
    """
    return _quotient(g, f, mu, 1.0)


def dual_rayleigh(g: SignedGraph, f, mu: VertexMeasure) -> float:
    """The dual quotient, with ‖f(u) + σ(uv)f(v)‖² in the numerator."""
    return _quotient(g, f, mu, -1.0)


def check_duality(g: SignedGraph, k: int) -> float:
    """|(2 − λ_{N−k+1}(Δ^σ)) − λ_k(Δ^{−σ})|."""
    n = g.vertex_count
    if not 1 <= k <= n:
        raise IndexOutOfRange(f"k={k} outside 1..{n}")
    own = spectrum(g, OperatorKind.NORMALIZED)
    dual = spectrum(negate(g), OperatorKind.NORMALIZED)
    return abs((2.0 - own.eigenvalue(n - k + 1)) - dual.eigenvalue(k))


def max_weight_degree_ratio(g: SignedGraph, mu: VertexMeasure) -> float:
    """d_μ^w = max_u Σ_{v∼u} w_uv / μ(u)."""
    if g.vertex_count == 0:
        return 0.0
    return float(np.max(g.degrees / mu.values))


def count_zero_eigenvalues(spec: Spectrum, tolerance: float = 1e-8) -> int:
    return int(np.count_nonzero(np.abs(spec.eigenvalues) <= tolerance))


def disjoint_support_bound(g: SignedGraph, functions: Sequence[np.ndarray]) -> tuple[float, float]:
    """(λ_k, 2·max_i R^σ(f_i)) for k disjointly supported functions, normalized operator."""
    k = len(functions)
    supports = [np.abs(np.asarray(f)) > 0 for f in functions]
    for i in range(k):
        for j in range(i + 1, k):
            if np.any(supports[i] & supports[j]):
                raise DisjointnessViolation(f"functions {i} and {j} share support")
    mu = VertexMeasure.degree(g)
    worst = max(rayleigh(g, f, mu) for f in functions)
    return spectrum(g).eigenvalue(k), 2.0 * worst
