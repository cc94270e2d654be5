import logging
import math
from collections import deque
from collections.abc import Iterable, Sequence
from typing import Optional

import numpy as np
from scipy.sparse import csgraph, csr_matrix

from signed_spectra.core.errors import (
    DuplicateEdge,
    NonFiniteWeight,
    NotAnEdge,
    SelfLoop,
    ZeroWeight,
)
from signed_spectra.models.graph import (
    BalanceResult,
    SignedGraph,
    SubBipartition,
    SwitchingFunction,
)
from signed_spectra.models.measure import VertexMeasure
from signed_spectra.schemas.options import SignFilter

logger = logging.getLogger(__name__)


def build_graph(
    edges: Iterable[tuple[str, str, float]],
    line_numbers: Optional[Sequence[int]] = None,
) -> SignedGraph:
    """Build a graph from (label_u, label_v, signed_weight) triples.

    The sign of ``signed_weight`` is the edge sign, its magnitude the weight.
    Vertices get dense indices in order of first appearance.
    """
    edges = list(edges)
    index: dict[str, int] = {}
    seen: dict[frozenset, str] = {}

    def where(position: int) -> str:
        if line_numbers is not None:
            return f"line {line_numbers[position]}"
        return f"edge #{position + 1}"

    for position, (a, b, value) in enumerate(edges):
        if a == b:
            raise SelfLoop(f"{where(position)}: self-loop at {a!r}")
        if not math.isfinite(value):
            raise NonFiniteWeight(f"{where(position)}: weight {value!r} on ({a!r}, {b!r}) is not finite")
        if value == 0:
            raise ZeroWeight(f"{where(position)}: zero weight on ({a!r}, {b!r})")
        pair = frozenset((a, b))
        if pair in seen:
            raise DuplicateEdge(f"{where(position)}: duplicate edge ({a!r}, {b!r}), first seen at {seen[pair]}")
        seen[pair] = where(position)
        for label in (a, b):
            index.setdefault(label, len(index))

    n = len(index)
    weights = np.zeros((n, n))
    signs = np.zeros((n, n), dtype=np.int8)
    for a, b, value in edges:
        i, j = index[a], index[b]
        weights[i, j] = weights[j, i] = abs(float(value))
        signs[i, j] = signs[j, i] = 1 if value > 0 else -1

    g = SignedGraph(labels=tuple(index), weights=weights, signs=signs)
    logger.debug("built graph N=%d edges=%d", g.vertex_count, g.edge_count)
    return g


def switch(g: SignedGraph, theta: SwitchingFunction) -> SignedGraph:
    """σ^θ(uv) = θ(u)σ(uv)θ(v); weights unchanged."""
    t = theta.as_array(g)
    return SignedGraph(labels=g.labels, weights=g.weights, signs=g.signs * np.outer(t, t).astype(np.int8))


def negate(g: SignedGraph) -> SignedGraph:
    """−Γ = (G, −σ)."""
    return SignedGraph(labels=g.labels, weights=g.weights, signs=-g.signs)


def connected_components(g: SignedGraph) -> list[np.ndarray]:
    """Vertex index arrays of the connected components, ordered by smallest member."""
    if g.vertex_count == 0:
        return []
    count, labels = csgraph.connected_components(csr_matrix(g.weights > 0), directed=False)
    components = [np.flatnonzero(labels == c) for c in range(count)]
    return sorted(components, key=lambda members: int(members[0]))


def _balance_search(g: SignedGraph, vertices: Optional[np.ndarray] = None):
    """BFS two-colouring with sign parity.

    Returns (theta, None) with σ(uv) = θ(u)θ(v) on every visited edge, or
    (None, cycle) where ``cycle`` has negative sign product.
    """
    n = g.vertex_count
    allowed = np.ones(n, dtype=bool) if vertices is None else np.zeros(n, dtype=bool)
    if vertices is not None:
        allowed[vertices] = True
    theta = np.zeros(n, dtype=np.int8)
    parent = np.full(n, -1)
    depth = np.zeros(n, dtype=int)

    for root in np.flatnonzero(allowed):
        if theta[root]:
            continue
        theta[root] = 1
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                if not allowed[v]:
                    continue
                expected = g.signs[u, v] * theta[u]
                if theta[v] == 0:
                    theta[v] = expected
                    parent[v] = u
                    depth[v] = depth[u] + 1
                    queue.append(v)
                elif theta[v] != expected:
                    return None, _tree_cycle(parent, depth, int(u), int(v))
    theta[~allowed] = 1
    return theta, None


def _tree_cycle(parent: np.ndarray, depth: np.ndarray, u: int, v: int) -> list[int]:
    left, right = [u], [v]
    a, b = u, v
    while depth[a] > depth[b]:
        a = int(parent[a])
        left.append(a)
    while depth[b] > depth[a]:
        b = int(parent[b])
        right.append(b)
    while a != b:
        a, b = int(parent[a]), int(parent[b])
        left.append(a)
        right.append(b)
    # left ends at the common ancestor; right repeats it
    return left + right[-2::-1]


def is_balanced(g: SignedGraph) -> BalanceResult:
    """Every component balanced ⇔ σ switching equivalent to σ_+.

    The witness is either θ with σ^θ ≡ +1 or a cycle with sign product −1.
    """
    theta, cycle = _balance_search(g)
    if cycle is not None:
        labels = tuple(g.labels[i] for i in cycle)
        logger.debug("unbalanced: negative cycle %s", labels)
        return BalanceResult(balanced=False, negative_cycle=labels)
    return BalanceResult(balanced=True, switching=SwitchingFunction.from_array(g, theta))


def is_antibalanced(g: SignedGraph) -> BalanceResult:
    return is_balanced(negate(g))


def is_balanced_subset(g: SignedGraph, vertices: np.ndarray) -> bool:
    """Balance of the induced signed subgraph on ``vertices`` (index array)."""
    _, cycle = _balance_search(g, vertices)
    return cycle is None


def harary_bipartition(g: SignedGraph) -> Optional[SubBipartition]:
    """(V_θ^+, V_θ^−) for a balancing θ, or None when g is unbalanced."""
    result = is_balanced(g)
    if not result.balanced or g.vertex_count == 0:
        return None
    minus = result.switching.negative_set
    return SubBipartition(frozenset(g.labels) - minus, minus)


def cycle_sign(g: SignedGraph, cycle: Sequence[str]) -> int:
    """Sign product around the closed walk cycle[0] → … → cycle[-1] → cycle[0]."""
    product = 1
    for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
        i, j = g.position(a), g.position(b)
        if g.weights[i, j] == 0:
            raise NotAnEdge(f"({a!r}, {b!r}) is not an edge")
        product *= int(g.signs[i, j])
    return product


def balanced_component_count(g: SignedGraph) -> int:
    return sum(is_balanced_subset(g, component) for component in connected_components(g))


def edge_measure(
    g: SignedGraph,
    v1: Iterable[str],
    v2: Iterable[str],
    sign_filter: SignFilter = SignFilter.ALL,
) -> float:
    """|E^±(V_1, V_2)| = Σ_{u∈V_1} Σ_{v∈V_2} w_uv over edges passing the filter.

    With V_1 = V_2 every edge is counted twice.
    """
    rows = np.flatnonzero(g.mask(v1))
    cols = np.flatnonzero(g.mask(v2))
    if rows.size == 0 or cols.size == 0:
        return 0.0
    weights = g.weights
    if sign_filter == SignFilter.POSITIVE:
        weights = np.where(g.signs > 0, weights, 0.0)
    elif sign_filter == SignFilter.NEGATIVE:
        weights = np.where(g.signs < 0, weights, 0.0)
    return float(weights[np.ix_(rows, cols)].sum())


def volume(mu: VertexMeasure, vertices: Iterable[str]) -> float:
    return mu.volume(vertices)


def signed_triangle_counts(g: SignedGraph, u: str, v: str) -> tuple[int, int]:
    """(♯⁺(u,v), ♯⁻(u,v)): common neighbours closing a positive / negative triangle."""
    i, j = g.position(u), g.position(v)
    if g.weights[i, j] == 0:
        raise NotAnEdge(f"({u!r}, {v!r}) is not an edge")
    return triangle_counts_by_index(g, i, j)


def triangle_counts_by_index(g: SignedGraph, i: int, j: int) -> tuple[int, int]:
    common = np.flatnonzero((g.weights[i] > 0) & (g.weights[j] > 0))
    products = g.signs[i, j] * g.signs[j, common] * g.signs[common, i]
    return int(np.count_nonzero(products > 0)), int(np.count_nonzero(products < 0))
