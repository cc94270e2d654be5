"""k-way signed spectral clustering.

embed → normalize → partition_projective → localize → select_coordinate →
sweep_quadratic, yielding k disjoint almost-balanced sub-bipartitions.
Antibalanced mode runs the same pipeline on −Γ: Δ^{−σ} = 2I − Δ^σ, so its
first k eigenfunctions span the last k eigenspaces of Δ^σ.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

import numpy as np

from signed_spectra.core.config import settings
from signed_spectra.core.errors import (
    BadEpsilon,
    DisjointnessViolation,
    EmptySet,
    IndexOutOfRange,
    InvariantViolation,
    NotUnit,
    PartitionFailure,
    ZeroMap,
)
from signed_spectra.models.cheeger import CheegerCertificate
from signed_spectra.models.clustering import (
    ClusterDiagnostics,
    ClusterResult,
    Embedding,
    NormalizedEmbedding,
)
from signed_spectra.models.graph import SignedGraph
from signed_spectra.models.measure import VertexMeasure
from signed_spectra.schemas.options import (
    CheegerMode,
    EmbeddingMode,
    MeasureKind,
    OperatorKind,
    PartitionStrategy,
)
from signed_spectra.services.cheeger import beta
from signed_spectra.services.graph_core import negate
from signed_spectra.services.partition import partition_projective, projective_distances
from signed_spectra.services.spectral import rayleigh, spectrum
from signed_spectra.services.sweep import sweep_quadratic

logger = logging.getLogger(__name__)

_ZERO_NORM = 1e-12
_UNIT_TOLERANCE = 1e-9
TRIPWIRE_CONSTANT = 50.0


def embed(g: SignedGraph, k: int, mode: EmbeddingMode = EmbeddingMode.BALANCED) -> Embedding:
    """Φ(v) = (φ_1(v), …, φ_k(v)), or φ_{N−k+1}..φ_N in antibalanced mode."""
    n = g.vertex_count
    if not 1 <= k <= n:
        raise IndexOutOfRange(f"k={k} outside 1..{n}")
    vectors = spectrum(g).eigenfunctions
    if EmbeddingMode(mode) == EmbeddingMode.ANTIBALANCED:
        return Embedding(graph=g, points=vectors[:, n - k :].copy(), source="last-k")
    return Embedding(graph=g, points=vectors[:, :k].copy(), source="first-k")


def projective_distance(x, y) -> float:
    """d_Φ(x, y) = min(‖x + y‖, ‖x − y‖) for unit vectors."""
    x, y = np.asarray(x, dtype=np.float64), np.asarray(y, dtype=np.float64)
    for name, vector in (("x", x), ("y", y)):
        if abs(float(np.linalg.norm(vector)) - 1.0) > _UNIT_TOLERANCE:
            raise NotUnit(f"{name} has norm {float(np.linalg.norm(vector))!r}, expected 1")
    return min(float(np.linalg.norm(x + y)), float(np.linalg.norm(x - y)))


def normalize(emb: Embedding) -> NormalizedEmbedding:
    norms = np.linalg.norm(emb.points, axis=1)
    kept = np.flatnonzero(norms > _ZERO_NORM)
    excluded = tuple(emb.graph.labels[i] for i in np.flatnonzero(norms <= _ZERO_NORM))
    if excluded:
        logger.debug("normalize: %d vertices with Φ(v) = 0 excluded", len(excluded))
    return NormalizedEmbedding(
        embedding=emb,
        indices=kept,
        points=emb.points[kept] / norms[kept, None],
        norms=norms[kept],
        excluded=excluded,
    )


def default_epsilon(k: int) -> float:
    """1/(2k^{5/2}) clipped to [0.05, 1.9]."""
    return float(np.clip(1.0 / (2.0 * k**2.5), 0.05, 1.9))


def _check_lipschitz(emb: Embedding, psi: np.ndarray, epsilon: float) -> None:
    u, v, _, s = emb.graph.edge_arrays
    phi = emb.points
    before = np.linalg.norm(phi[u] - s[:, None] * phi[v], axis=1)
    after = np.linalg.norm(psi[u] - s[:, None] * psi[v], axis=1)
    excess = after - (1.0 + 2.0 / epsilon) * before
    worst = int(np.argmax(excess)) if excess.size else 0
    if excess.size and excess[worst] > 1e-9 * max(1.0, float(before[worst])):
        labels = emb.graph.labels
        raise InvariantViolation(
            f"localization Lipschitz bound fails on edge ({labels[u[worst]]!r}, {labels[v[worst]]!r})"
        )


def localize(emb: Embedding, subset, epsilon: float) -> np.ndarray:
    """Ψ = θΦ with θ(v) = max(0, 1 − d_Φ(v, S ∩ Ṽ_Φ)/ε) and θ ≡ 1 on S."""
    if not 0.0 < epsilon < 2.0:
        raise BadEpsilon(f"epsilon must lie in (0, 2), got {epsilon!r}")
    normalized = normalize(emb)
    g = emb.graph
    in_subset = g.mask(subset)[normalized.indices]
    if not in_subset.any():
        raise EmptySet("localization needs a subset meeting Ṽ_Φ")

    distance = projective_distances(normalized.points, normalized.points[in_subset]).min(axis=1)
    theta = np.zeros(g.vertex_count)
    theta[normalized.indices] = np.maximum(0.0, 1.0 - distance / epsilon)
    theta[normalized.indices[in_subset]] = 1.0
    psi = theta[:, None] * emb.points
    if settings.CHECK_INVARIANTS:
        _check_lipschitz(emb, psi, epsilon)
    return psi


def select_coordinate(
    g: SignedGraph, psi: np.ndarray, mu: Optional[VertexMeasure] = None
) -> tuple[np.ndarray, int]:
    """The coordinate of Ψ with least R^σ; ties keep the lowest index."""
    mu = VertexMeasure.degree(g) if mu is None else mu
    psi = np.asarray(psi, dtype=np.float64)
    if psi.ndim == 1:
        psi = psi[:, None]
    usable = [j for j in range(psi.shape[1]) if np.sum(mu.values * psi[:, j] ** 2) > 0]
    if not usable:
        raise ZeroMap("every coordinate of the localized map vanishes")
    quotients = [rayleigh(g, psi[:, j], mu) for j in usable]
    best = usable[int(np.argmin(quotients))]
    if settings.CHECK_INVARIANTS and min(quotients) > rayleigh(g, psi, mu) + 1e-12:
        raise InvariantViolation("coordinate selection increased the Rayleigh quotient")
    return psi[:, best].copy(), best


def _cluster_stage(work: SignedGraph, emb: Embedding, subset, epsilon: float, mu: VertexMeasure):
    psi = localize(emb, subset, epsilon)
    coordinate, index = select_coordinate(work, psi, mu)
    support = coordinate != 0
    swept = sweep_quadratic(work, coordinate, mu, within=support)
    return {
        "support": support,
        "localized": rayleigh(work, psi, mu),
        "selected": rayleigh(work, coordinate, mu),
        "coordinate": index,
        "sweep": swept,
    }


def _run_stages(work, emb, subsets, epsilon, mu):
    with ThreadPoolExecutor(max_workers=max(1, settings.THREADS)) as pool:
        return list(pool.map(lambda subset: _cluster_stage(work, emb, subset, epsilon, mu), subsets))


def _disjoint(supports) -> bool:
    total = np.sum(supports, axis=0)
    return bool(np.all(total <= 1))


def cluster(
    g: SignedGraph,
    k: int,
    mode: EmbeddingMode = EmbeddingMode.BALANCED,
    strategy: PartitionStrategy = PartitionStrategy.RANDOM_PADDED,
    epsilon: Optional[float] = None,
    seed: Optional[int] = None,
    mass_floor: Optional[float] = None,
    sep_floor: float = 0.0,
) -> ClusterResult:
    """Find k disjoint sub-bipartitions with small β^σ (β^{−σ} in antibalanced mode)."""
    mode, strategy = EmbeddingMode(mode), PartitionStrategy(strategy)
    seed = settings.DEFAULT_SEED if seed is None else seed
    if epsilon is not None and not 0.0 < epsilon < 2.0:
        raise BadEpsilon(f"epsilon must lie in (0, 2), got {epsilon!r}")
    work = negate(g) if mode == EmbeddingMode.ANTIBALANCED else g
    mu = VertexMeasure.degree(work)

    emb = embed(work, k, EmbeddingMode.BALANCED)
    normalized = normalize(emb)
    if normalized.indices.size == 0:
        raise PartitionFailure("no vertex has a nonzero spectral embedding")
    part = partition_projective(normalized, mu, k, strategy, seed, mass_floor, sep_floor)

    eps = default_epsilon(k) if epsilon is None else float(epsilon)
    shrunk = False
    if k > 1 and eps > part.separation / 2.0:
        if part.separation <= 0.0:
            raise DisjointnessViolation("clusters share a projective point; no ε keeps them apart")
        logger.warning("epsilon %.4g exceeds half the separation %.4g; shrinking", eps, part.separation)
        eps, shrunk = part.separation / 2.0, True

    stages = _run_stages(work, emb, part.subsets, eps, mu)
    if not _disjoint([stage["support"] for stage in stages]):
        raise DisjointnessViolation(f"localized supports overlap at epsilon {eps:.4g}")

    parts = tuple(stage["sweep"].bipartition for stage in stages)
    betas = tuple(beta(work, bp, mu) for bp in parts)

    lambda_k = spectrum(work).eigenvalue(k)
    scale = k**3 * np.sqrt(max(lambda_k, 0.0))
    tripwire_ratio = float(max(betas) / scale) if scale > 1e-12 else None
    exceeded = max(betas) > TRIPWIRE_CONSTANT * scale + 1e-9
    if exceeded:
        logger.warning("max beta %.6g above %g·k³·√λ_k = %.6g", max(betas), TRIPWIRE_CONSTANT, TRIPWIRE_CONSTANT * scale)

    notes = ()
    if strategy == PartitionStrategy.RANDOM_PADDED:
        notes = ("random-padded partition is a ball-growing stand-in with mass floor and no separation guarantee",)

    diagnostics = ClusterDiagnostics(
        embedding_rayleigh=rayleigh(work, emb.points, mu),
        localized_rayleigh=tuple(stage["localized"] for stage in stages),
        selected_rayleigh=tuple(stage["selected"] for stage in stages),
        selected_coordinates=tuple(stage["coordinate"] for stage in stages),
        sweep_guarantees=tuple(stage["sweep"].guarantee for stage in stages),
        thresholds=tuple(stage["sweep"].threshold for stage in stages),
        epsilon=eps,
        epsilon_shrunk=shrunk,
        separation=part.separation,
        masses=part.masses,
        partition_attempts=part.attempts,
        excluded_vertices=normalized.excluded,
        lambda_k=lambda_k,
        tripwire_ratio=tripwire_ratio,
        tripwire_exceeded=bool(exceeded),
        notes=notes,
    )
    logger.debug("cluster k=%d mode=%s betas=%s", k, mode.value, betas)
    return ClusterResult(
        k=k,
        mode=mode,
        strategy=strategy,
        seed=seed,
        parts=parts,
        betas=betas,
        raw_subsets=part.subsets,
        diagnostics=diagnostics,
    )


def sweep_certificate(
    g: SignedGraph, k: int, mu: VertexMeasure, seed: Optional[int] = None
) -> CheegerCertificate:
    """Upper bound on h_k^σ(μ) from spectral sweeps.

    k = 1 sweeps the first eigenfunction of the operator matching μ
    (Δ^σ for μ_d, otherwise L^σ); larger k takes the clustering parts and
    re-scores them under μ.
    """
    if k == 1:
        operator = OperatorKind.NORMALIZED if mu.kind == MeasureKind.DEGREE else OperatorKind.KIRCHHOFF
        swept = sweep_quadratic(g, spectrum(g, operator).eigenfunction(1), mu)
        witness = (swept.bipartition,)
    else:
        witness = cluster(g, k, seed=seed).parts
    return CheegerCertificate(
        value=max(beta(g, bp, mu) for bp in witness),
        witness=witness,
        mode=CheegerMode.SWEEP_UPPER_BOUND,
    )
