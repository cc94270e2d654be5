"""Reference graphs and seeded random corpora.

Run ``python -m signed_spectra.corpus DIR`` to write the named reference
graphs as edge-list files.
"""
import sys
from collections.abc import Sequence
from pathlib import Path

import numpy as np

from signed_spectra.io.graph_file import format_graph
from signed_spectra.models.graph import SignedGraph
from signed_spectra.services.graph_core import build_graph


def all_negative_triangle() -> SignedGraph:
    return build_graph([("a", "b", -1.0), ("b", "c", -1.0), ("a", "c", -1.0)])


def all_positive_triangle() -> SignedGraph:
    return build_graph([("a", "b", 1.0), ("b", "c", 1.0), ("a", "c", 1.0)])


def complete_signed(n: int, sign: int = 1) -> SignedGraph:
    return build_graph([(f"v{i}", f"v{j}", float(sign)) for i in range(n) for j in range(i + 1, n)])


def cycle_with_negative_edges(n: int, count: int = 1) -> SignedGraph:
    """Unweighted C_n whose first ``count`` edges are negative."""
    return build_graph(
        [(f"v{i}", f"v{(i + 1) % n}", -1.0 if i < count else 1.0) for i in range(n)]
    )


def disjoint_union(graphs: Sequence[SignedGraph]) -> SignedGraph:
    """Block-diagonal union; labels become ``"<position>.<label>"``."""
    labels = [f"{i}.{label}" for i, g in enumerate(graphs) for label in g.labels]
    n = len(labels)
    signed = np.zeros((n, n))
    offset = 0
    for g in graphs:
        size = g.vertex_count
        signed[offset : offset + size, offset : offset + size] = g.signed_adjacency
        offset += size
    return SignedGraph.from_signed_adjacency(signed, labels)


def _random_weights(rng: np.random.Generator, size, weight_range, unweighted: bool) -> np.ndarray:
    if unweighted:
        return np.ones(size)
    low, high = weight_range
    return rng.uniform(low, high, size=size)


def random_signed_graph(
    rng: np.random.Generator,
    n: int,
    edge_prob: float = 0.5,
    negative_prob: float = 0.5,
    weight_range: tuple[float, float] = (0.5, 2.0),
    complete: bool = False,
    unweighted: bool = False,
) -> SignedGraph:
    """G(n, p) with random signs and weights; isolated vertices get one random edge."""
    iu, iv = np.triu_indices(n, k=1)
    present = np.ones(iu.size, dtype=bool) if complete else rng.random(iu.size) < edge_prob
    signs = np.where(rng.random(iu.size) < negative_prob, -1.0, 1.0)
    weights = _random_weights(rng, iu.size, weight_range, unweighted)

    signed = np.zeros((n, n))
    signed[iu[present], iv[present]] = (signs * weights)[present]
    signed += signed.T
    for vertex in range(n):
        if np.any(signed[vertex] != 0):
            continue
        partner = int(rng.choice([u for u in range(n) if u != vertex]))
        sign = -1.0 if rng.random() < negative_prob else 1.0
        value = sign * float(_random_weights(rng, 1, weight_range, unweighted)[0])
        signed[vertex, partner] = signed[partner, vertex] = value
    return SignedGraph.from_signed_adjacency(signed, [f"v{i}" for i in range(n)])


def balanced_components(sizes: Sequence[int], seed: int = 0, unweighted: bool = False) -> SignedGraph:
    """Disjoint union of connected balanced graphs with random hidden bipartitions."""
    rng = np.random.default_rng(seed)
    parts = []
    for size in sizes:
        g = random_signed_graph(rng, size, edge_prob=0.6, unweighted=unweighted)
        path = np.zeros((size, size))
        index = np.arange(size - 1)
        path[index, index + 1] = path[index + 1, index] = 1.0
        weights = np.where(g.weights > 0, g.weights, path)
        theta = rng.choice((-1.0, 1.0), size=size)
        parts.append(SignedGraph.from_signed_adjacency(weights * np.outer(theta, theta), g.labels))
    return disjoint_union(parts)


def random_corpus(seed: int, count: int, max_n: int, min_n: int = 3, **options) -> list[SignedGraph]:
    """``count`` graphs with N uniform in [min_n, max_n], deterministic per seed."""
    rng = np.random.default_rng(seed)
    return [random_signed_graph(rng, int(rng.integers(min_n, max_n + 1)), **options) for _ in range(count)]


NAMED_GRAPHS = {
    "all_negative_triangle": all_negative_triangle,
    "all_positive_triangle": all_positive_triangle,
    "cycle5_one_negative": lambda: cycle_with_negative_edges(5),
    "two_balanced_components": lambda: balanced_components((4, 5), seed=0),
}


def write_reference_graphs(directory: Path) -> None:
    directory.mkdir(parents=True, exist_ok=True)
    for name, factory in NAMED_GRAPHS.items():
        path = directory / f"{name}.txt"
        if path.exists():
            continue
        path.write_text(format_graph(factory()), encoding="utf-8")
        print(f"Wrote graph: {path}")
    print("Reference graphs written successfully.")


if __name__ == "__main__":
    write_reference_graphs(Path(sys.argv[1] if len(sys.argv) > 1 else "graphs"))
