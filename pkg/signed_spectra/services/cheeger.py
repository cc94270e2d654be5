"""Signed bipartiteness ratios, frustration and exact signed Cheeger constants.

A sub-bipartition (V_1, V_2) is handled as its indicator x (+1 on V_1, −1 on
V_2, 0 elsewhere). With that encoding the numerator of β^σ is

    Σ_{u∼v} w_uv |x(u) − σ(uv) x(v)|

and the denominator is Σ_u μ(u)|x(u)|, so whole chunks of candidates are
scored with a couple of array operations. Exhaustive searches walk their
codes in increasing order and keep the first optimum, which makes every
witness reproducible.
"""
import logging
from collections.abc import Iterable
from dataclasses import dataclass
from typing import Optional

import numpy as np

from signed_spectra.core.config import settings
from signed_spectra.core.errors import (
    BudgetExceeded,
    EmptySet,
    IndexOutOfRange,
    TooLargeForExact,
    ZeroFunction,
)
from signed_spectra.models.cheeger import CheegerCertificate, FrustrationResult
from signed_spectra.models.graph import SignedGraph, SubBipartition, SwitchingFunction
from signed_spectra.models.measure import VertexMeasure
from signed_spectra.schemas.options import CheegerMode, ExactMethod, FrustrationMethod
from signed_spectra.services.graph_core import edge_measure, negate

logger = logging.getLogger(__name__)

_CHUNK = 1 << 15


# ── Ratios ────────────────────────────────────────────────────────────────


def bipartition_numerators(g: SignedGraph, x: np.ndarray) -> np.ndarray:
    """Σ_e w|x(u) − σ x(v)| for every row of ``x``."""
    u, v, w, s = g.edge_arrays
    if u.size == 0:
        return np.zeros(x.shape[0])
    return (np.abs(x[:, u] - s * x[:, v]) * w).sum(axis=1)


def beta(g: SignedGraph, bp: SubBipartition, mu: VertexMeasure) -> float:
    """β^σ(V_1, V_2).

    (2|E^+(V_1,V_2)| + |E^−(V_1)| + |E^−(V_2)| + |E(V_1∪V_2, complement)|) / vol_μ(V_1∪V_2),
    internal negative edges counted twice.
    """
    x = bp.indicator(g)
    return float(bipartition_numerators(g, x[None, :])[0]) / mu.volume(bp.union)


def signed_expansion(g: SignedGraph, vertices: Iterable[str], mu: VertexMeasure) -> float:
    """ρ^σ(S) = (|E^−(S)| + |E(S, S̄)|) / vol_μ(S), identical to β^σ(S, ∅)."""
    members = frozenset(vertices)
    if not members:
        raise EmptySet("signed expansion of the empty set is undefined")
    return beta(g, SubBipartition(members), mu)


def l1_rayleigh(g: SignedGraph, f, mu: VertexMeasure) -> float:
    """Σ_{u∼v} w_uv |f(u) − σ(uv)f(v)| / Σ_u μ(u)|f(u)|."""
    values = g.as_vector(f)
    denominator = float(np.sum(mu.values * np.abs(values)))
    if denominator == 0.0:
        raise ZeroFunction("ℓ1 Rayleigh quotient of the zero function is undefined")
    return float(bipartition_numerators(g, values[None, :])[0]) / denominator


# ── Frustration ───────────────────────────────────────────────────────────


def _members(g: SignedGraph, vertices: Iterable[str]) -> np.ndarray:
    members = np.flatnonzero(g.mask(vertices))
    if members.size == 0:
        raise EmptySet("vertex set is empty")
    return members


def _induced_edges(g: SignedGraph, members: np.ndarray):
    weights = g.weights[np.ix_(members, members)]
    iu, iv = np.nonzero(np.triu(weights, k=1))
    signs = g.signs[np.ix_(members, members)][iu, iv].astype(np.float64)
    return iu, iv, weights[iu, iv], signs


def _switching_rows(codes: np.ndarray, m: int) -> np.ndarray:
    """±1 rows with the first vertex fixed at +1; bit j of a code flips vertex j+1."""
    rows = np.ones((codes.size, m))
    if m > 1:
        bits = (codes[:, None] >> np.arange(m - 1, dtype=np.int64)) & 1
        rows[:, 1:] = 1.0 - 2.0 * bits
    return rows


def _exact_switching(m: int, iu, iv, w, s) -> np.ndarray:
    if m == 1 or w.size == 0:
        return np.ones(m)
    total = 1 << (m - 1)
    best_value, best_code = np.inf, 0
    for start in range(0, total, _CHUNK):
        codes = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        t = _switching_rows(codes, m)
        negative = (s * t[:, iu] * t[:, iv] < 0).astype(np.float64) @ w
        j = int(np.argmin(negative))
        if negative[j] < best_value:
            best_value, best_code = negative[j], int(codes[j])
    logger.debug("exact frustration m=%d switchings=%d", m, total)
    return _switching_rows(np.array([best_code], dtype=np.int64), m)[0]


def _local_search(m: int, iu, iv, w, s, seed: int, restarts: int) -> np.ndarray:
    """Steepest descent over single-vertex switchings, restarted from seeded points.

    The first start is the identity switching.
    """
    a = np.zeros((m, m))
    a[iu, iv] = a[iv, iu] = w * s
    rng = np.random.default_rng(seed)
    best_t, best_value = np.ones(m), np.inf
    for attempt in range(max(1, restarts)):
        t = np.ones(m) if attempt == 0 else rng.choice((-1.0, 1.0), size=m)
        while True:
            # positive minus negative incident weight; flipping j changes the total by gain[j]
            gain = t * (a @ t)
            j = int(np.argmin(gain))
            if gain[j] >= -1e-12:
                break
            t[j] = -t[j]
        t = t * t[0]
        value = float(w[s * t[iu] * t[iv] < 0].sum())
        if value < best_value:
            best_t, best_value = t.copy(), value
    logger.debug("local-search frustration m=%d restarts=%d value=%s", m, restarts, best_value)
    return best_t


def frustration(
    g: SignedGraph,
    vertices: Iterable[str],
    method: FrustrationMethod = FrustrationMethod.EXACT,
    seed: Optional[int] = None,
    restarts: Optional[int] = None,
) -> FrustrationResult:
    """e^σ_min(S): least total weight whose deletion balances the induced subgraph on S.

    Computed as the minimum over switchings θ of the negative weight inside S,
    so the deleted edges are the negative edges under the best θ.
    """
    method = FrustrationMethod(method)
    members = _members(g, vertices)
    m = members.size
    iu, iv, w, s = _induced_edges(g, members)

    if method == FrustrationMethod.EXACT:
        if m > settings.FRUSTRATION_EXACT_CAP:
            raise TooLargeForExact(
                f"exact frustration on {m} vertices exceeds the cap of {settings.FRUSTRATION_EXACT_CAP}; "
                "use the local-search method"
            )
        t = _exact_switching(m, iu, iv, w, s)
    else:
        t = _local_search(
            m,
            iu,
            iv,
            w,
            s,
            settings.DEFAULT_SEED if seed is None else seed,
            settings.LOCAL_SEARCH_RESTARTS if restarts is None else restarts,
        )

    negative = s * t[iu] * t[iv] < 0
    theta = np.ones(g.vertex_count, dtype=np.int8)
    theta[members] = t.astype(np.int8)
    deleted = tuple(
        (g.labels[members[a]], g.labels[members[b]]) for a, b in zip(iu[negative], iv[negative])
    )
    return FrustrationResult(
        value=float(w[negative].sum()),
        deleted_edges=deleted,
        best_switching=SwitchingFunction.from_array(g, theta),
        method=method,
    )


def alpha_bar(g: SignedGraph, vertices: Iterable[str], mu: VertexMeasure) -> float:
    """ᾱ^σ(S) = (2e^σ_min(S) + |E(S, S̄)|) / vol_μ(S) with exact frustration."""
    members = frozenset(vertices)
    result = frustration(g, members, FrustrationMethod.EXACT)
    boundary = edge_measure(g, members, frozenset(g.labels) - members)
    return (2.0 * result.value + boundary) / mu.volume(members)


def best_bipartition(
    g: SignedGraph, vertices: Iterable[str], mu: VertexMeasure
) -> tuple[SubBipartition, float]:
    """Minimum of β^σ(V_1, V_2) over all ordered bipartitions V_1 ∪ V_2 = S."""
    members = _members(g, vertices)
    m = members.size
    if m > settings.FRUSTRATION_EXACT_CAP:
        raise TooLargeForExact(f"{m} vertices exceeds the enumeration cap of {settings.FRUSTRATION_EXACT_CAP}")
    volume = mu.volume(g.labels_of(members))
    total = 1 << m
    best_value, best_x = np.inf, None
    for start in range(0, total, _CHUNK):
        codes = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        bits = (codes[:, None] >> np.arange(m, dtype=np.int64)) & 1
        x = np.zeros((codes.size, g.vertex_count))
        x[:, members] = 1.0 - 2.0 * bits
        numerators = bipartition_numerators(g, x)
        j = int(np.argmin(numerators))
        if numerators[j] < best_value:
            best_value, best_x = numerators[j], x[j]
    return SubBipartition.from_indicator(g, best_x), float(best_value) / volume


def min_switching_expansion(
    g: SignedGraph, vertices: Iterable[str], mu: VertexMeasure
) -> tuple[SwitchingFunction, float]:
    """Minimum of ρ^{σ^θ}(S) over switchings θ supported on S.

    Scores every θ by the quadratic form θᵀA^σθ on the induced block, which is
    independent of the edge-wise sums used by ``frustration``.
    """
    members = _members(g, vertices)
    m = members.size
    if m > settings.FRUSTRATION_EXACT_CAP:
        raise TooLargeForExact(f"{m} vertices exceeds the enumeration cap of {settings.FRUSTRATION_EXACT_CAP}")
    block = g.signed_adjacency[np.ix_(members, members)]
    internal = float(g.weights[np.ix_(members, members)].sum())
    labels = g.labels_of(members)
    boundary = edge_measure(g, labels, frozenset(g.labels) - labels)
    volume = mu.volume(labels)

    total = 1 << max(m - 1, 0)
    best_value, best_t = np.inf, None
    for start in range(0, total, _CHUNK):
        codes = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        t = _switching_rows(codes, m)
        negative = (internal - np.einsum("ci,ij,cj->c", t, block, t)) / 2.0
        j = int(np.argmin(negative))
        if negative[j] < best_value:
            best_value, best_t = negative[j], t[j]
    theta = np.ones(g.vertex_count, dtype=np.int8)
    theta[members] = best_t.astype(np.int8)
    return SwitchingFunction.from_array(g, theta), (float(best_value) + boundary) / volume


# ── Exact Cheeger constants ───────────────────────────────────────────────


def _digits(codes: np.ndarray, base: int, n: int) -> np.ndarray:
    powers = base ** np.arange(n, dtype=np.int64)
    return (codes[:, None] // powers) % base


def _mask_bits(n: int) -> np.ndarray:
    return ((np.arange(1 << n, dtype=np.int64)[:, None] >> np.arange(n, dtype=np.int64)) & 1).astype(np.float64)


@dataclass(frozen=True)
class _BipartitionTable:
    """For every union mask S: the best β^σ numerator over bipartitions of S and its code."""

    numerators: np.ndarray
    codes: np.ndarray
    volumes: np.ndarray

    @property
    def alpha(self) -> np.ndarray:
        out = np.full(self.numerators.size, np.inf)
        np.divide(self.numerators, self.volumes, out=out, where=self.volumes > 0)
        return out


def _bipartition_table(g: SignedGraph, mu: VertexMeasure) -> _BipartitionTable:
    n = g.vertex_count
    size = 1 << n
    best = np.full(size, np.inf)
    code_of = np.full(size, -1, dtype=np.int64)
    powers2 = np.int64(1) << np.arange(n, dtype=np.int64)
    total = 3**n

    # code 0 leaves every vertex unused
    for start in range(1, total, _CHUNK):
        codes = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        digits = _digits(codes, 3, n)
        x = (digits == 1).astype(np.float64) - (digits == 2)
        masks = (digits > 0).astype(np.int64) @ powers2
        numerators = bipartition_numerators(g, x)

        order = np.lexsort((codes, numerators, masks))
        leading = np.ones(order.size, dtype=bool)
        leading[1:] = masks[order][1:] != masks[order][:-1]
        pick = order[leading]
        better = numerators[pick] < best[masks[pick]]
        pick = pick[better]
        best[masks[pick]] = numerators[pick]
        code_of[masks[pick]] = codes[pick]

    logger.debug("bipartition table N=%d assignments=%d", n, total - 1)
    return _BipartitionTable(numerators=best, codes=code_of, volumes=_mask_bits(n) @ mu.values)


def _disjoint_minimax(alpha: np.ndarray, k: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """f_j(A) = min over nonempty B ⊆ A of max(alpha[B], f_{j−1}(A \\ B)), f_0 ≡ 0.

    Returns (f_j, argmin B) for j = 1..k; ties keep the smallest B.
    """
    size = alpha.size
    masks = np.arange(size, dtype=np.int64)
    previous = np.zeros(size)
    levels = []
    for _ in range(k):
        current = np.full(size, np.inf)
        choice = np.zeros(size, dtype=np.int64)
        for sub in range(1, size):
            avail = masks[(masks & sub) == sub]
            candidate = np.maximum(alpha[sub], previous[avail ^ sub])
            better = candidate < current[avail]
            current[avail[better]] = candidate[better]
            choice[avail[better]] = sub
        levels.append((current, choice))
        previous = current
    return levels


def _decode_pair(g: SignedGraph, code: int) -> SubBipartition:
    digits = _digits(np.array([code], dtype=np.int64), 3, g.vertex_count)[0]
    return SubBipartition(g.labels_of(digits == 1), g.labels_of(digits == 2))


def _exact_cost(n: int, k: int, method: ExactMethod) -> int:
    if method == ExactMethod.ASSIGNMENTS:
        return (2 * k + 1) ** n
    return k * 3**n


def _check_budget(g: SignedGraph, k: int, method: ExactMethod, budget: Optional[int]) -> None:
    n = g.vertex_count
    if n == 0:
        raise EmptySet("graph has no vertices")
    if not 1 <= k <= n:
        raise IndexOutOfRange(f"k={k} outside 1..{n}")
    if method == ExactMethod.SWITCHING and k != 1:
        raise IndexOutOfRange("the switching method computes h_1 only")
    limit = settings.EXACT_BUDGET if budget is None else budget
    cost = _exact_cost(n, k, method)
    if cost > limit:
        logger.warning("exact enumeration refused N=%d k=%d cost=%d budget=%d", n, k, cost, limit)
        raise BudgetExceeded(
            f"exact h_{k} on {n} vertices needs {cost} enumeration states (budget {limit}); "
            "use sweep mode for an upper bound"
        )


def _certificates_from_table(g: SignedGraph, table: _BipartitionTable, k_max: int) -> list[CheegerCertificate]:
    levels = _disjoint_minimax(table.alpha, k_max)
    full = (1 << g.vertex_count) - 1
    certificates = []
    for k in range(1, k_max + 1):
        avail, witness = full, []
        for level in range(k, 0, -1):
            sub = int(levels[level - 1][1][avail])
            witness.append(_decode_pair(g, int(table.codes[sub])))
            avail ^= sub
        certificates.append(
            CheegerCertificate(
                value=float(levels[k - 1][0][full]),
                witness=tuple(witness),
                mode=CheegerMode.EXACT_ENUMERATION,
            )
        )
    return certificates


def _assignment_search(g: SignedGraph, k: int, mu: VertexMeasure) -> CheegerCertificate:
    """Direct walk over {unused, V_1, …, V_2k}^N."""
    n = g.vertex_count
    base = 2 * k + 1
    total = base**n
    best_value, best_code = np.inf, -1
    for start in range(0, total, _CHUNK):
        codes = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        digits = _digits(codes, base, n)
        worst = np.zeros(codes.size)
        for i in range(k):
            x = (digits == 2 * i + 1).astype(np.float64) - (digits == 2 * i + 2)
            volumes = np.abs(x) @ mu.values
            ratio = np.full(codes.size, np.inf)
            np.divide(bipartition_numerators(g, x), volumes, out=ratio, where=volumes > 0)
            worst = np.maximum(worst, ratio)
        j = int(np.argmin(worst))
        if worst[j] < best_value:
            best_value, best_code = worst[j], int(codes[j])

    digits = _digits(np.array([best_code], dtype=np.int64), base, n)[0]
    witness = tuple(
        SubBipartition(g.labels_of(digits == 2 * i + 1), g.labels_of(digits == 2 * i + 2)) for i in range(k)
    )
    logger.debug("assignment search N=%d k=%d states=%d", n, k, total)
    return CheegerCertificate(value=float(best_value), witness=witness, mode=CheegerMode.EXACT_ENUMERATION)


def _switching_search(g: SignedGraph, mu: VertexMeasure) -> CheegerCertificate:
    """h_1 as min over S of ᾱ^σ(S), skipping S whose boundary term alone is no better."""
    n = g.vertex_count
    bits = _mask_bits(n)
    volumes = bits @ mu.values
    u, v, w, _ = g.edge_arrays
    boundaries = (bits[:, u] != bits[:, v]).astype(np.float64) @ w

    best_value, best_pair, visited = np.inf, None, 0
    for mask in range(1, 1 << n):
        if boundaries[mask] / volumes[mask] >= best_value:
            continue
        visited += 1
        members = g.labels_of(bits[mask] > 0)
        result = frustration(g, members, FrustrationMethod.EXACT)
        value = (2.0 * result.value + boundaries[mask]) / volumes[mask]
        if value < best_value:
            minus = result.best_switching.negative_set & members
            best_value, best_pair = value, SubBipartition(members - minus, minus)
    logger.debug("switching search N=%d subsets visited=%d of %d", n, visited, (1 << n) - 1)
    return CheegerCertificate(value=float(best_value), witness=(best_pair,), mode=CheegerMode.SWITCHING_FORM)


def h_exact(
    g: SignedGraph,
    k: int,
    mu: VertexMeasure,
    method: ExactMethod = ExactMethod.SUBSETS,
    budget: Optional[int] = None,
) -> CheegerCertificate:
    """h_k^σ(μ): min over k pairwise disjoint sub-bipartitions of max_i β^σ.

    ``subsets`` tabulates the best bipartition of every vertex subset and
    combines disjoint subsets by dynamic programming; ``assignments`` walks
    every (2k+1)^N labelling; ``switching`` (k = 1) minimizes ᾱ^σ(S).
    """
    method = ExactMethod(method)
    _check_budget(g, k, method, budget)
    if method == ExactMethod.ASSIGNMENTS:
        return _assignment_search(g, k, mu)
    if method == ExactMethod.SWITCHING:
        return _switching_search(g, mu)
    return _certificates_from_table(g, _bipartition_table(g, mu), k)[-1]


def cheeger_profile(
    g: SignedGraph, k_max: int, mu: VertexMeasure, budget: Optional[int] = None
) -> list[CheegerCertificate]:
    """h_1, …, h_{k_max} from one shared bipartition table."""
    _check_budget(g, k_max, ExactMethod.SUBSETS, budget)
    return _certificates_from_table(g, _bipartition_table(g, mu), k_max)


def dual_h_exact(
    g: SignedGraph,
    k: int,
    mu: VertexMeasure,
    method: ExactMethod = ExactMethod.SUBSETS,
    budget: Optional[int] = None,
) -> CheegerCertificate:
    """h̃_k^σ(μ) = h_k^{−σ}(μ)."""
    return h_exact(negate(g), k, mu, method=method, budget=budget)


def bipartiteness_ratio(g: SignedGraph, mu: VertexMeasure, budget: Optional[int] = None) -> float:
    """Unsigned bipartiteness ratio of |G|.

    min over nonzero y ∈ {−1, 0, 1}^V of Σ_{u∼v} w_uv |y(u) + y(v)| / Σ_u μ(u)|y(u)|,
    read from the weights alone.
    """
    _check_budget(g, 1, ExactMethod.SUBSETS, budget)
    n = g.vertex_count
    u, v = np.nonzero(np.triu(g.weights, k=1))
    w = g.weights[u, v]
    total = 3**n
    best = np.inf
    for start in range(0, total, _CHUNK):
        codes = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        y = _digits(codes, 3, n).astype(np.float64) - 1.0
        volumes = np.abs(y) @ mu.values
        ratios = np.full(codes.size, np.inf)
        np.divide(np.abs(y[:, u] + y[:, v]) @ w, volumes, out=ratios, where=volumes > 0)
        best = min(best, float(ratios.min()))
    logger.debug("bipartiteness ratio N=%d vectors=%d", n, total)
    return best
